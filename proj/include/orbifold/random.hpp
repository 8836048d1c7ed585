#pragma once

// Seeded generators for the property suites. Everything is drawn from one
// std::mt19937_64 so a (seed, scale) pair reproduces a run exactly.

#include "orbifold/equivariant.hpp"
#include "orbifold/monodromy.hpp"
#include "orbifold/orbbundle.hpp"

#include <random>

namespace orbifold {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin(double p = 0.5);
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))]; }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// 0 or a small prime.
int random_characteristic(Rng& rng);

/// A tame order in [2, max_order] for the characteristic.
int random_tame_order(Rng& rng, int characteristic, int max_order = 12);

/// Points "0", "inf", "p1".."p5".
const std::vector<PointLabel>& sample_points();

TameBranchData random_branch_data(Rng& rng, const CurveTag& curve, int max_points = 4);

/// P' >= P: every order multiplied by a tame factor, possibly new points.
TameBranchData random_refinement(Rng& rng, const TameBranchData& P);

OrbDivisor random_divisor(Rng& rng, const OrbifoldCurve& ambient, int max_coeff = 6);

/// Class of a random divisor; the ambient must have genus 0.
OrbLineClass random_class(Rng& rng, const OrbifoldCurve& ambient, int max_coeff = 6);

OrbBundle random_bundle(Rng& rng, const OrbifoldCurve& ambient, int max_rank = 4);

/// A profile with tame indices over target (any genus) that passes
/// Riemann-Hurwitz; with rational_source the source has genus 0.
RamificationProfile random_profile(Rng& rng, const CurveTag& target, int max_degree,
                                   bool rational_source = false);

/// A connected datum of degree <= max_degree with 1..3 branch cycles and the
/// given number of handles.
MonodromyDatum random_monodromy(Rng& rng, int max_degree, int handles, int characteristic = 0);

EqLineBundle random_eq_line_bundle(Rng& rng, const CyclicCoverSpec& spec, int max_coeff = 6);

} // namespace orbifold
