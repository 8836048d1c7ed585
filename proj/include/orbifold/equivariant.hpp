#pragma once

// The cyclic Kummer case of the correspondence between orbifold bundles on
// (P^1, {0:m, inf:m}) and Z/m-equivariant bundles on the cover z -> z^m.
//
// Conventions. The generator of Z/m acts on functions by s(z) -> s(zeta z).
// EqLineBundle{a, b, orbits, c} is O_Y(a.0' + b.inf' + sum k_p.orbit(p)) with
// the linearisation acting on the fibre at 0' by zeta^c. The pullback
// linearisation of O_Y(a.0' + ...) has c = -a (mod m). A monomial z^j is an
// invariant section iff -a <= j <= b + m.sum k_p and j + a + c = 0 (mod m).
//
// Multiplication by z^k identifies (a, b, c) with (a - k, b + k, c), so an
// equivariant line bundle is determined up to isomorphism by c and its degree.
// Inverting T on that normal form gives
//   S(a, b, orbits, c) = class of  -c.[0] + (a + b + c).[inf] + sum k_p.[p].

#include "orbifold/orbbundle.hpp"

#include <map>
#include <vector>

namespace orbifold {

struct CyclicCoverSpec {
    int m = 2;
    int characteristic = 0;

    bool operator==(const CyclicCoverSpec&) const = default;
};

inline const PointLabel kZero = "0";
inline const PointLabel kInfinity = "inf";

void validate(const CyclicCoverSpec& spec);

/// (P^1, {0:m, inf:m}).
OrbifoldCurve target_orbifold(const CyclicCoverSpec& spec);

/// z -> z^m as a Galois profile over the target.
RamificationProfile kummer_profile(const CyclicCoverSpec& spec);

class EqLineBundle {
public:
    EqLineBundle() = default;
    /// The character is reduced mod m; zero orbit coefficients are dropped.
    EqLineBundle(CyclicCoverSpec spec, std::int64_t a, std::int64_t b,
                 std::map<PointLabel, std::int64_t> orbits, std::int64_t character);

    static EqLineBundle trivial(const CyclicCoverSpec& spec);

    const CyclicCoverSpec& spec() const { return spec_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    const std::map<PointLabel, std::int64_t>& orbits() const { return orbits_; }
    std::int64_t character() const { return character_; }

    bool operator==(const EqLineBundle&) const = default;

private:
    CyclicCoverSpec spec_;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    std::map<PointLabel, std::int64_t> orbits_;
    std::int64_t character_ = 0;
};

class EqBundle {
public:
    explicit EqBundle(std::vector<EqLineBundle> summands);

    const CyclicCoverSpec& spec() const { return summands_.front().spec(); }
    const std::vector<EqLineBundle>& summands() const { return summands_; }
    int rank() const { return static_cast<int>(summands_.size()); }

private:
    std::vector<EqLineBundle> summands_;
};

/// a + b + m.sum k_p.
std::int64_t eq_degree(const EqLineBundle& L);
Rational eq_slope(const EqBundle& V);

EqLineBundle tensor(const EqLineBundle& L, const EqLineBundle& M);
EqLineBundle dual(const EqLineBundle& L);

/// Normal form a = (-c mod m), b = degree - a, no orbits.
EqLineBundle canonical(const EqLineBundle& L);
bool isomorphic(const EqLineBundle& L, const EqLineBundle& M);

/// Counts invariant monomials directly.
std::int64_t h0_invariants(const EqLineBundle& L);

/// Counts all monomials, ignoring the group action.
std::int64_t h0_plain(const EqLineBundle& L);

/// T on a divisor of the target orbifold: coefficients at 0 and inf become
/// a and b, other points become orbit coefficients, c = -a.
EqLineBundle T_pullback(const OrbDivisor& D, const CyclicCoverSpec& spec);
/// T on a class, landing on the normal form.
EqLineBundle T_pullback(const OrbLineClass& L, const CyclicCoverSpec& spec);
EqBundle T_pullback(const OrbBundle& E, const CyclicCoverSpec& spec);

OrbLineClass S_pushforward(const EqLineBundle& L);
OrbBundle S_pushforward(const EqBundle& V);

bool eq_is_semistable(const EqBundle& V);
bool eq_is_polystable(const EqBundle& V);
bool eq_is_stable(const EqBundle& V);

/// [S(O, chi^c) : c = 0..m-1]; entry 0 is the trivial class.
std::vector<OrbLineClass> pushforward_structure(const CyclicCoverSpec& spec);

/// Invariant sections of M (x) L^dual.
std::int64_t hom_dim_equivariant(const EqLineBundle& L, const EqLineBundle& M);
/// All sections of M (x) L^dual on the underlying P^1.
std::int64_t hom_dim_plain(const EqLineBundle& L, const EqLineBundle& M);

} // namespace orbifold
