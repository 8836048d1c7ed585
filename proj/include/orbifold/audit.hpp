#pragma once

// Numerical probes of the genuine-ramification lemmas on explicit rank-1
// examples. Nothing here asserts a lemma; each statement gets a status tag
// derived mechanically from exact comparisons.
//
// Readings that the statements leave open are computed side by side:
//   pushforward of O over (X,P), "stack" flavour: the character pieces
//     S(O, chi^c) on (X, B_f) carried to (X,P) by iota (needs P >= B_f);
//   "coarse" flavour: their coarse floors O_X(floor) carried to (X,P);
//   Hom upstairs, "plain": Hom in Vect(Y, f*P) of the stacky pullbacks;
//   "equivariant": Z/m-invariant Hom of the T-images (needs P <= B_f).
// The two pushforward flavours and the equivariant reading are available for
// Kummer covers only.

#include "orbifold/equivariant.hpp"
#include "orbifold/monodromy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbifold {

struct AuditCase {
    std::string id;
    MonodromyDatum cover;
    TameBranchData P;
    OrbDivisor L;
    OrbDivisor M;
};

enum class AuditStatus { Consistent, Discrepant, NotApplicable };

std::string to_string(AuditStatus s);

struct StatusEntry {
    std::string statement;   // e.g. "quotient_negative_degree"
    std::string reading;     // flavour or Hom reading; empty when unique
    AuditStatus status = AuditStatus::NotApplicable;
    std::string note;
};

struct PushforwardFlavour {
    std::vector<Rational> degrees;          // all m pieces, c = 0..m-1, on (X,P)
    std::vector<Rational> pulled_back;      // f*-degrees of the quotient pieces c >= 1
    Rational quotient_mu_max{0};            // mu_max(F (x) quotient), F = M
};

struct AuditReport {
    std::string id;

    // hypotheses
    int degree = 1;
    std::uint64_t group_order = 1;
    bool galois = false;
    bool genuinely_ramified = false;
    int etale_degree = 1;
    int source_genus = 0;
    std::optional<int> kummer_m;
    TameBranchData branch_of_cover;      // B_f
    TameBranchData pulled_back_branch;   // f*P
    bool P_geq_Bf = false;
    bool P_leq_Bf = false;

    // objects
    OrbLineClass L;
    OrbLineClass M;
    Rational slope_L{0};
    Rational slope_M{0};
    bool equal_slopes = false;

    // hom dimensions
    std::int64_t hom_orbifold = 0;
    std::optional<std::int64_t> hom_plain_pullback;
    std::optional<std::int64_t> hom_equivariant;

    std::optional<PushforwardFlavour> stack;
    std::optional<PushforwardFlavour> coarse;

    std::vector<StatusEntry> statuses;
    std::vector<std::string> notes;

    /// The entry for (statement, reading); throws std::out_of_range if absent.
    const StatusEntry& status(const std::string& statement, const std::string& reading = "") const;
};

/// Ids of the built-in cases, in a fixed order.
std::vector<std::string> builtin_audit_ids();

/// Throws SchemaError for unknown ids.
AuditCase builtin_audit_case(const std::string& id, int characteristic = 0);

/// Runs every probe. Throws InvariantError if the cover is disconnected, the
/// base has positive genus, or the branch data or divisors live elsewhere.
AuditReport run_audit(const AuditCase& c);

/// Recognises z -> z^m: genus 0 base, no handles, two branch points "0" and
/// "inf", each a single m-cycle.
std::optional<int> kummer_order(const MonodromyDatum& M);

/// The z -> z^m datum with branch cycles (1 .. m) at "0" and its inverse at "inf".
MonodromyDatum kummer_datum(int m, int characteristic = 0);

} // namespace orbifold
