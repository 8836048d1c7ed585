#include "orbifold/random.hpp"

#include "orbifold/errors.hpp"

#include <algorithm>
#include <numeric>

namespace orbifold {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool Rng::coin(double p)
{
    return std::bernoulli_distribution(p)(engine_);
}

int random_characteristic(Rng& rng)
{
    static const std::vector<int> chars{0, 0, 0, 2, 3, 5, 7};
    return rng.pick(chars);
}

int random_tame_order(Rng& rng, int characteristic, int max_order)
{
    for (;;) {
        const int n = static_cast<int>(rng.uniform(2, max_order));
        if (is_tame(n, characteristic))
            return n;
    }
}

const std::vector<PointLabel>& sample_points()
{
    static const std::vector<PointLabel> pts{"0", "inf", "p1", "p2", "p3", "p4", "p5"};
    return pts;
}

namespace {

std::vector<PointLabel> distinct_points(Rng& rng, std::size_t k)
{
    auto pts = sample_points();
    std::shuffle(pts.begin(), pts.end(), rng.engine());
    pts.resize(std::min(k, pts.size()));
    return pts;
}

/// A partition of d into exactly `parts` tame parts, descending; nullopt if
/// the draw hit a wild part.
std::optional<Partition> partition_with_parts(Rng& rng, int d, int parts, int characteristic)
{
    Partition p(static_cast<std::size_t>(parts), 1);
    for (int extra = d - parts; extra > 0; --extra)
        ++p[static_cast<std::size_t>(rng.uniform(0, parts - 1))];
    for (int e : p)
        if (!is_tame(e, characteristic))
            return std::nullopt;
    std::sort(p.rbegin(), p.rend());
    return p;
}

} // namespace

TameBranchData random_branch_data(Rng& rng, const CurveTag& curve, int max_points)
{
    std::map<PointLabel, int> orders;
    for (const auto& x : distinct_points(rng, static_cast<std::size_t>(rng.uniform(0, max_points))))
        orders[x] = random_tame_order(rng, curve.characteristic);
    return TameBranchData(curve, std::move(orders));
}

TameBranchData random_refinement(Rng& rng, const TameBranchData& P)
{
    const int p = P.curve().characteristic;
    auto orders = P.orders();
    for (auto& [x, n] : orders)
        if (rng.coin())
            n *= random_tame_order(rng, p, 4);
    for (const auto& x : sample_points())
        if (!orders.count(x) && rng.coin(0.2))
            orders[x] = random_tame_order(rng, p, 6);
    return TameBranchData(P.curve(), std::move(orders));
}

OrbDivisor random_divisor(Rng& rng, const OrbifoldCurve& ambient, int max_coeff)
{
    std::map<PointLabel, std::int64_t> coeffs;
    for (const auto& x : sample_points())
        if (ambient.is_stacky(x) || rng.coin(0.3))
            coeffs[x] = rng.uniform(-max_coeff, max_coeff);
    return OrbDivisor(ambient, std::move(coeffs));
}

OrbLineClass random_class(Rng& rng, const OrbifoldCurve& ambient, int max_coeff)
{
    return class_of(random_divisor(rng, ambient, max_coeff));
}

OrbBundle random_bundle(Rng& rng, const OrbifoldCurve& ambient, int max_rank)
{
    const auto rank = rng.uniform(1, max_rank);
    std::vector<OrbLineClass> summands;
    // Small coefficients make slope collisions (semistable sums) common.
    const int spread = static_cast<int>(rng.uniform(0, 3));
    const auto base = random_class(rng, ambient, 3);
    for (std::int64_t i = 0; i < rank; ++i)
        summands.push_back(spread == 0 ? base : random_class(rng, ambient, spread));
    return OrbBundle(std::move(summands));
}

RamificationProfile random_profile(Rng& rng, const CurveTag& target, int max_degree,
                                   bool rational_source)
{
    if (rational_source && target.genus != 0)
        throw InvariantError("a rational source needs a rational target");
    const int p = target.characteristic;
    for (;;) {
        const int d = static_cast<int>(rng.uniform(1, max_degree));
        if (d == 1)
            return RamificationProfile::create(target, 1, {}, true);
        const auto points = distinct_points(rng, static_cast<std::size_t>(rng.uniform(0, 4)));
        FiberMap fibers;
        int R = 0;
        bool ok = true;
        int remaining = 2 * d - 2;
        for (std::size_t i = 0; i < points.size() && ok; ++i) {
            int defect;
            if (rational_source) {
                if (remaining == 0)
                    break;
                const bool last = i + 1 == points.size();
                defect = last ? remaining
                              : static_cast<int>(rng.uniform(1, std::min(d - 1, remaining)));
                if (defect > d - 1) {
                    ok = false;
                    break;
                }
                remaining -= defect;
            } else {
                defect = static_cast<int>(rng.uniform(0, d - 1));
            }
            if (defect == 0)
                continue;
            auto part = partition_with_parts(rng, d, d - defect, p);
            if (!part) {
                ok = false;
                break;
            }
            fibers[points[i]] = *part;
            R += defect;
        }
        if (!ok || (rational_source && remaining != 0))
            continue;
        const int twice = d * (2 * target.genus - 2) + R + 2;
        if (twice < 0 || twice % 2 != 0)
            continue;
        return RamificationProfile::create(target, d, std::move(fibers), false);
    }
}

namespace {

Permutation random_permutation(Rng& rng, int d)
{
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng.engine());
    return Permutation(std::move(images));
}

} // namespace

MonodromyDatum random_monodromy(Rng& rng, int max_degree, int handles, int characteristic)
{
    static const std::vector<PointLabel> labels{"b1", "b2", "b3"};
    for (;;) {
        const int d = static_cast<int>(rng.uniform(2, max_degree));
        const int k = static_cast<int>(rng.uniform(handles == 0 ? 2 : 0, 3));
        std::vector<std::pair<Permutation, Permutation>> hs;
        Permutation product = Permutation::identity(d);
        for (int h = 0; h < handles; ++h) {
            auto a = random_permutation(rng, d);
            auto b = random_permutation(rng, d);
            product = product * a * b * a.inverse() * b.inverse();
            hs.emplace_back(std::move(a), std::move(b));
        }
        std::vector<BranchCycle> cycles;
        for (int j = 0; j + 1 < k; ++j) {
            auto s = random_permutation(rng, d);
            product = product * s;
            cycles.push_back(BranchCycle{labels[static_cast<std::size_t>(j)], std::move(s)});
        }
        if (k > 0)
            cycles.push_back(BranchCycle{labels[static_cast<std::size_t>(k - 1)], product.inverse()});
        else if (!product.is_identity())
            continue;
        try {
            auto M = MonodromyDatum::create(handles, d, characteristic, std::move(hs),
                                            std::move(cycles));
            if (is_connected(M))
                return M;
        } catch (const InvariantError&) {
            // identity or wild cycle: redraw
        }
    }
}

EqLineBundle random_eq_line_bundle(Rng& rng, const CyclicCoverSpec& spec, int max_coeff)
{
    std::map<PointLabel, std::int64_t> orbits;
    for (const auto& x : {"p1", "p2", "p3"})
        if (rng.coin(0.3))
            orbits[x] = rng.uniform(-2, 2);
    return EqLineBundle(spec, rng.uniform(-max_coeff, max_coeff), rng.uniform(-max_coeff, max_coeff),
                        std::move(orbits), rng.uniform(0, spec.m - 1));
}

} // namespace orbifold
