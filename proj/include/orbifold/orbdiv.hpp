#pragma once

// Stacky divisors and line-bundle classes on tame orbifold curves.
//
// A stacky point x with stabiliser of order n_x has degree 1/n_x. Degrees and
// pullbacks work in any genus. Linear equivalence is decided on genus 0 only:
// principal divisors on the stack are coarse pullbacks of degree-0 divisors,
// so n_x.x moves freely and a class is classified by its residues
// m_x mod n_x at stacky points together with its total rational degree.

#include "orbifold/orbicore.hpp"
#include "orbifold/rational.hpp"

#include <map>

namespace orbifold {

class OrbDivisor {
public:
    OrbDivisor() = default;
    /// Zero coefficients are dropped.
    OrbDivisor(OrbifoldCurve ambient, std::map<PointLabel, std::int64_t> coefficients);

    const OrbifoldCurve& ambient() const { return ambient_; }
    const std::map<PointLabel, std::int64_t>& coefficients() const { return coefficients_; }
    std::int64_t coefficient(const PointLabel& x) const;

    OrbDivisor operator+(const OrbDivisor& rhs) const;
    OrbDivisor operator-() const;
    OrbDivisor operator-(const OrbDivisor& rhs) const { return *this + (-rhs); }

    bool operator==(const OrbDivisor&) const = default;

private:
    OrbifoldCurve ambient_;
    std::map<PointLabel, std::int64_t> coefficients_;
};

/// A line bundle O(D) on a genus-0 orbifold curve, up to isomorphism.
class OrbLineClass {
public:
    OrbLineClass() = default;
    /// Residues are reduced mod n_x; throws InvariantError if the ambient has
    /// positive genus, a residue sits at a non-stacky point, or
    /// degree - sum r_x/n_x is not an integer.
    OrbLineClass(OrbifoldCurve ambient, std::map<PointLabel, std::int64_t> residues,
                 Rational total_degree);

    static OrbLineClass trivial(const OrbifoldCurve& ambient);

    const OrbifoldCurve& ambient() const { return ambient_; }
    /// Non-zero residues only, each in [1, n_x).
    const std::map<PointLabel, std::int64_t>& residues() const { return residues_; }
    std::int64_t residue(const PointLabel& x) const;
    const Rational& total_degree() const { return degree_; }

    bool operator==(const OrbLineClass&) const = default;

private:
    OrbifoldCurve ambient_;
    std::map<PointLabel, std::int64_t> residues_;
    Rational degree_{0};
};

/// sum m_x / n_x.
Rational deg_P(const OrbDivisor& D);

/// Coefficients scaled by n'_x / n_x onto (X, P'). Requires P <= P'.
OrbDivisor iota_pullback(const OrbDivisor& D, const TameBranchData& Pprime);

/// Divisor on (Y, f*P): coefficient at y over x is m_x * e_y / gcd(n_x, e_y).
OrbDivisor cover_pullback(const OrbDivisor& D, const RamificationProfile& f);

OrbLineClass class_of(const OrbDivisor& D);

/// A divisor in the class: residues at stacky points plus an integer
/// coefficient at a non-stacky base point.
OrbDivisor representative(const OrbLineClass& L);

/// A label on the curve that is not a stacky point (used as coarse base point).
PointLabel free_base_point(const OrbifoldCurve& ambient);

OrbLineClass class_add(const OrbLineClass& L, const OrbLineClass& M);
OrbLineClass class_neg(const OrbLineClass& L);

struct FloorView {
    std::int64_t coarse_degree = 0;
    std::map<PointLabel, Rational> weights;   // r_x / n_x, non-zero only
};

/// Parabolic picture: deg_P = coarse_degree + sum of weights.
FloorView floor_view(const OrbLineClass& L);

/// Sections of the coarse floor: max(0, coarse_degree + 1).
std::int64_t h0(const OrbLineClass& L);

/// dim Hom(L, M) = h0(M - L).
std::int64_t hom_dim(const OrbLineClass& L, const OrbLineClass& M);

} // namespace orbifold
