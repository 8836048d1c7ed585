#pragma once

#include <stdexcept>
#include <string>

namespace orbifold {

// Malformed input documents: missing fields, wrong types, bad notation.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant (wild order, curve
// mismatch, inconsistent Riemann-Hurwitz count, disconnected cover, ...).
class InvariantError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An enumeration exceeded its configured cap.
class CapExceeded : public InvariantError {
public:
    using InvariantError::InvariantError;
};

} // namespace orbifold
