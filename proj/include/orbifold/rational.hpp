#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace orbifold {

using Rational = boost::rational<std::int64_t>;

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q". Throws SchemaError on malformed input.
Rational parse_rational(std::string_view text);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

} // namespace orbifold
