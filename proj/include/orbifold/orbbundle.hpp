#pragma once

// Decomposable orbifold bundles: formal direct sums of line classes.
//
// For E = L_1 + ... + L_r every line subsheaf maps non-trivially to some L_i,
// so its degree is at most max deg L_i. Hence E is semistable iff all summand
// slopes agree, and the HN filtration groups summands by slope. Line classes
// are stable, so semistable sums are polystable; a sum of rank >= 2 has an
// equal-slope proper summand and is never stable.

#include "orbifold/orbdiv.hpp"

#include <vector>

namespace orbifold {

class OrbBundle {
public:
    /// Throws InvariantError on an empty list or mixed ambients.
    explicit OrbBundle(std::vector<OrbLineClass> summands);

    const OrbifoldCurve& ambient() const { return summands_.front().ambient(); }
    const std::vector<OrbLineClass>& summands() const { return summands_; }
    int rank() const { return static_cast<int>(summands_.size()); }

    bool operator==(const OrbBundle&) const = default;

private:
    std::vector<OrbLineClass> summands_;
};

struct HNStratum {
    Rational slope;
    std::vector<int> indices;   // 0-based summand positions, ascending
};

using HNReport = std::vector<HNStratum>;   // strictly decreasing slopes

OrbBundle direct_sum(const OrbBundle& E, const OrbBundle& F);

OrbLineClass det(const OrbBundle& E);
Rational deg_P(const OrbBundle& E);
Rational slope_P(const OrbBundle& E);
Rational slope_P(const OrbLineClass& L);

HNReport hn(const OrbBundle& E);
Rational mu_max(const OrbBundle& E);

bool is_semistable(const OrbBundle& E);
bool is_polystable(const OrbBundle& E);
bool is_stable(const OrbBundle& E);

OrbBundle tensor_line(const OrbBundle& E, const OrbLineClass& L);

/// A line class on (X,P) pulled back along the profile to (Y, f*P), then
/// along iota to (Y, Q). The source must have genus 0.
OrbLineClass pullback_class(const OrbLineClass& L, const RamificationProfile& f,
                            const TameBranchData& Q);

/// Summand-wise pullback. Throws InvariantError unless f : (Y,Q) -> (X,P) is
/// a morphism.
OrbBundle pullback_bundle(const OrbBundle& E, const RamificationProfile& f,
                          const TameBranchData& Q);

/// Line class carried along iota : (X,P') -> (X,P).
OrbLineClass iota_pullback(const OrbLineClass& L, const TameBranchData& Pprime);
OrbBundle iota_pullback(const OrbBundle& E, const TameBranchData& Pprime);

struct ParabolicSummand {
    std::int64_t coarse_degree = 0;
    std::map<PointLabel, Rational> weights;
};

struct ParabolicView {
    std::vector<ParabolicSummand> summands;
    Rational parabolic_slope{0};   // mean coarse degree plus mean weight sum
};

ParabolicView parabolic_view(const OrbBundle& E);

} // namespace orbifold
