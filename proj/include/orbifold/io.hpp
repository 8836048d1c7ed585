#pragma once

// JSON documents for every module. Parsing failures (missing keys, wrong
// types, bad notation) raise SchemaError; well-formed documents describing
// impossible objects raise InvariantError from the constructors.
//
// Documents
//   branch      {"curve": str, "orders": {pt: n}, "genus"?: g, "characteristic"?: p}
//   profile     {"source_genus"?, "target_genus", "characteristic"?, "degree",
//                "galois", "fibers": {pt: [e, ...]}}
//   monodromy   {"base_genus", "degree", "characteristic"?, "handles": [[a, b], ...],
//                "branch_cycles": {pt: "(1 2)(3 4)" | ["(1 2)", "(2 3)"]}}
//               A list is the product of its entries, rightmost applied first.
//   divisor     {"coefficients": {pt: k}}
//   class       {"residues": {pt: [r, n]}, "degree": "p/q"}
//   bundle      {"summands": [class or divisor, ...], "branch"?: branch}
//   eq line     {"m", "a", "b", "orbits": {pt: k}, "character"}
//   audit case  {"id", "cover": monodromy, "branch": branch, "L": divisor, "M": divisor}
//
// The target of a cover is always the curve named "X".

#include "orbifold/audit.hpp"
#include "orbifold/equivariant.hpp"
#include "orbifold/monodromy.hpp"
#include "orbifold/orbbundle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace orbifold {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; SchemaError on I/O or syntax failure.
Json load_json_file(const std::string& path);

/// Characteristic supplied on the command line. A document that states a
/// different one is rejected.
struct ParseContext {
    std::optional<int> characteristic;

    int resolve(const Json& doc, const char* key = "characteristic") const;
};

TameBranchData parse_branch_data(const Json& doc, const ParseContext& ctx = {});
Json to_json(const TameBranchData& P);

RamificationProfile parse_profile(const Json& doc, const ParseContext& ctx = {});
Json to_json(const RamificationProfile& f);

MonodromyDatum parse_monodromy(const Json& doc, const ParseContext& ctx = {});
Json to_json(const MonodromyDatum& M);

/// A cover is either a profile document (has "fibers") or a monodromy
/// document (has "branch_cycles").
using CoverDoc = std::variant<RamificationProfile, MonodromyDatum>;
CoverDoc parse_cover(const Json& doc, const ParseContext& ctx = {});
RamificationProfile profile_of(const CoverDoc& cover);

OrbDivisor parse_divisor(const Json& doc, const OrbifoldCurve& ambient);
Json to_json(const OrbDivisor& D);

/// Accepts a class document or a divisor document.
OrbLineClass parse_class(const Json& doc, const OrbifoldCurve& ambient);
Json to_json(const OrbLineClass& L);

OrbBundle parse_bundle(const Json& doc, const OrbifoldCurve& ambient);
Json to_json(const OrbBundle& E);
Json to_json(const HNReport& hn);

EqLineBundle parse_eq_line_bundle(const Json& doc, const ParseContext& ctx = {});
Json to_json(const EqLineBundle& L);

AuditCase parse_audit_case(const Json& doc, const ParseContext& ctx = {});
Json to_json(const AuditReport& r);

Json rational_json(const Rational& r);

} // namespace orbifold
