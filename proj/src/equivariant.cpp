#include "orbifold/equivariant.hpp"

#include "orbifold/errors.hpp"

#include <algorithm>

namespace orbifold {

void validate(const CyclicCoverSpec& spec)
{
    if (spec.m < 2)
        throw InvariantError("cyclic cover needs m >= 2");
    validate(CurveTag{"X", 0, spec.characteristic});
    if (!is_tame(spec.m, spec.characteristic))
        throw InvariantError("m = " + std::to_string(spec.m) + " is wild in characteristic " +
                             std::to_string(spec.characteristic));
}

OrbifoldCurve target_orbifold(const CyclicCoverSpec& spec)
{
    validate(spec);
    return OrbifoldCurve(TameBranchData(CurveTag{"X", 0, spec.characteristic},
                                        {{kZero, spec.m}, {kInfinity, spec.m}}));
}

RamificationProfile kummer_profile(const CyclicCoverSpec& spec)
{
    validate(spec);
    return RamificationProfile::create(CurveTag{"X", 0, spec.characteristic}, spec.m,
                                       {{kZero, {spec.m}}, {kInfinity, {spec.m}}}, true, 0);
}

EqLineBundle::EqLineBundle(CyclicCoverSpec spec, std::int64_t a, std::int64_t b,
                           std::map<PointLabel, std::int64_t> orbits, std::int64_t character)
    : spec_(spec), a_(a), b_(b), character_(mod_floor(character, spec.m))
{
    validate(spec_);
    for (auto& [p, k] : orbits) {
        if (p == kZero || p == kInfinity)
            throw InvariantError("orbit coefficient at branch point '" + p + "'");
        if (k != 0)
            orbits_.emplace(p, k);
    }
}

EqLineBundle EqLineBundle::trivial(const CyclicCoverSpec& spec)
{
    return EqLineBundle(spec, 0, 0, {}, 0);
}

EqBundle::EqBundle(std::vector<EqLineBundle> summands) : summands_(std::move(summands))
{
    if (summands_.empty())
        throw InvariantError("an equivariant bundle needs at least one summand");
    for (const auto& L : summands_)
        if (!(L.spec() == summands_.front().spec()))
            throw InvariantError("equivariant summands over different covers");
}

namespace {

void require_same_spec(const EqLineBundle& L, const EqLineBundle& M)
{
    if (!(L.spec() == M.spec()))
        throw InvariantError("equivariant bundles over different covers");
}

std::int64_t orbit_total(const EqLineBundle& L)
{
    std::int64_t total = 0;
    for (const auto& [p, k] : L.orbits())
        total += k;
    return total;
}

} // namespace

std::int64_t eq_degree(const EqLineBundle& L)
{
    return L.a() + L.b() + L.spec().m * orbit_total(L);
}

Rational eq_slope(const EqBundle& V)
{
    std::int64_t total = 0;
    for (const auto& L : V.summands())
        total += eq_degree(L);
    return Rational(total, V.rank());
}

EqLineBundle tensor(const EqLineBundle& L, const EqLineBundle& M)
{
    require_same_spec(L, M);
    auto orbits = L.orbits();
    for (const auto& [p, k] : M.orbits())
        orbits[p] += k;
    return EqLineBundle(L.spec(), L.a() + M.a(), L.b() + M.b(), std::move(orbits),
                        L.character() + M.character());
}

EqLineBundle dual(const EqLineBundle& L)
{
    auto orbits = L.orbits();
    for (auto& [p, k] : orbits)
        k = -k;
    return EqLineBundle(L.spec(), -L.a(), -L.b(), std::move(orbits), -L.character());
}

EqLineBundle canonical(const EqLineBundle& L)
{
    const std::int64_t a = mod_floor(-L.character(), L.spec().m);
    return EqLineBundle(L.spec(), a, eq_degree(L) - a, {}, L.character());
}

bool isomorphic(const EqLineBundle& L, const EqLineBundle& M)
{
    return canonical(L) == canonical(M);
}

std::int64_t h0_invariants(const EqLineBundle& L)
{
    const std::int64_t m = L.spec().m;
    // Each orbit coefficient k moves to k.m at inf' via (z^m - t_p)^k.
    const std::int64_t top = L.b() + m * orbit_total(L);
    std::int64_t count = 0;
    for (std::int64_t j = -L.a(); j <= top; ++j)
        if (mod_floor(j + L.a() + L.character(), m) == 0)
            ++count;
    return count;
}

std::int64_t h0_plain(const EqLineBundle& L)
{
    const std::int64_t top = L.b() + L.spec().m * orbit_total(L);
    std::int64_t count = 0;
    for (std::int64_t j = -L.a(); j <= top; ++j)
        ++count;
    return count;
}

EqLineBundle T_pullback(const OrbDivisor& D, const CyclicCoverSpec& spec)
{
    if (!(D.ambient() == target_orbifold(spec)))
        throw InvariantError("T needs a divisor on (P^1, {0:m, inf:m})");
    std::map<PointLabel, std::int64_t> orbits;
    for (const auto& [x, k] : D.coefficients())
        if (x != kZero && x != kInfinity)
            orbits.emplace(x, k);
    const std::int64_t a = D.coefficient(kZero);
    return EqLineBundle(spec, a, D.coefficient(kInfinity), std::move(orbits), -a);
}

EqLineBundle T_pullback(const OrbLineClass& L, const CyclicCoverSpec& spec)
{
    if (!(L.ambient() == target_orbifold(spec)))
        throw InvariantError("T needs a class on (P^1, {0:m, inf:m})");
    const std::int64_t a = L.residue(kZero);
    const Rational scaled = L.total_degree() * Rational(spec.m);
    return EqLineBundle(spec, a, scaled.numerator() - a, {}, -a);
}

EqBundle T_pullback(const OrbBundle& E, const CyclicCoverSpec& spec)
{
    std::vector<EqLineBundle> out;
    for (const auto& L : E.summands())
        out.push_back(T_pullback(L, spec));
    return EqBundle(std::move(out));
}

OrbLineClass S_pushforward(const EqLineBundle& L)
{
    std::map<PointLabel, std::int64_t> coefficients = L.orbits();
    coefficients[kZero] += -L.character();
    coefficients[kInfinity] += L.a() + L.b() + L.character();
    return class_of(OrbDivisor(target_orbifold(L.spec()), std::move(coefficients)));
}

OrbBundle S_pushforward(const EqBundle& V)
{
    std::vector<OrbLineClass> out;
    for (const auto& L : V.summands())
        out.push_back(S_pushforward(L));
    return OrbBundle(std::move(out));
}

bool eq_is_semistable(const EqBundle& V)
{
    const auto d0 = eq_degree(V.summands().front());
    return std::all_of(V.summands().begin(), V.summands().end(),
                       [&](const EqLineBundle& L) { return eq_degree(L) == d0; });
}

bool eq_is_polystable(const EqBundle& V)
{
    return eq_is_semistable(V);
}

bool eq_is_stable(const EqBundle& V)
{
    return V.rank() == 1;
}

std::vector<OrbLineClass> pushforward_structure(const CyclicCoverSpec& spec)
{
    std::vector<OrbLineClass> out;
    for (int c = 0; c < spec.m; ++c)
        out.push_back(S_pushforward(EqLineBundle(spec, 0, 0, {}, c)));
    return out;
}

std::int64_t hom_dim_equivariant(const EqLineBundle& L, const EqLineBundle& M)
{
    require_same_spec(L, M);
    return h0_invariants(tensor(M, dual(L)));
}

std::int64_t hom_dim_plain(const EqLineBundle& L, const EqLineBundle& M)
{
    require_same_spec(L, M);
    return h0_plain(tensor(M, dual(L)));
}

} // namespace orbifold
