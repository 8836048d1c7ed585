#include "orbifold/orbbundle.hpp"

#include "orbifold/errors.hpp"

#include <algorithm>

namespace orbifold {

OrbBundle::OrbBundle(std::vector<OrbLineClass> summands) : summands_(std::move(summands))
{
    if (summands_.empty())
        throw InvariantError("a bundle needs at least one summand");
    for (const auto& L : summands_)
        if (!(L.ambient() == summands_.front().ambient()))
            throw InvariantError("bundle summands live on different orbifold curves");
}

OrbBundle direct_sum(const OrbBundle& E, const OrbBundle& F)
{
    auto summands = E.summands();
    summands.insert(summands.end(), F.summands().begin(), F.summands().end());
    return OrbBundle(std::move(summands));
}

OrbLineClass det(const OrbBundle& E)
{
    OrbLineClass total = OrbLineClass::trivial(E.ambient());
    for (const auto& L : E.summands())
        total = class_add(total, L);
    return total;
}

Rational deg_P(const OrbBundle& E)
{
    return det(E).total_degree();
}

Rational slope_P(const OrbBundle& E)
{
    return deg_P(E) / Rational(E.rank());
}

Rational slope_P(const OrbLineClass& L)
{
    return L.total_degree();
}

HNReport hn(const OrbBundle& E)
{
    HNReport report;
    for (int i = 0; i < E.rank(); ++i) {
        const Rational s = slope_P(E.summands()[static_cast<std::size_t>(i)]);
        auto it = std::find_if(report.begin(), report.end(),
                               [&](const HNStratum& st) { return st.slope == s; });
        if (it == report.end())
            report.push_back(HNStratum{s, {i}});
        else
            it->indices.push_back(i);
    }
    std::sort(report.begin(), report.end(),
              [](const HNStratum& a, const HNStratum& b) { return a.slope > b.slope; });
    return report;
}

Rational mu_max(const OrbBundle& E)
{
    return hn(E).front().slope;
}

bool is_semistable(const OrbBundle& E)
{
    return hn(E).size() == 1;
}

bool is_polystable(const OrbBundle& E)
{
    return is_semistable(E);
}

bool is_stable(const OrbBundle& E)
{
    return E.rank() == 1;
}

OrbBundle tensor_line(const OrbBundle& E, const OrbLineClass& L)
{
    std::vector<OrbLineClass> out;
    out.reserve(E.summands().size());
    for (const auto& S : E.summands())
        out.push_back(class_add(S, L));
    return OrbBundle(std::move(out));
}

OrbLineClass pullback_class(const OrbLineClass& L, const RamificationProfile& f,
                            const TameBranchData& Q)
{
    const auto& P = L.ambient().branch_data();
    if (!is_morphism(f, Q, P))
        throw InvariantError("pullback needs a morphism (Y,Q) -> (X,P), i.e. Q >= f*P");
    const OrbDivisor upstairs = cover_pullback(representative(L), f);
    return class_of(iota_pullback(upstairs, Q));
}

OrbBundle pullback_bundle(const OrbBundle& E, const RamificationProfile& f,
                          const TameBranchData& Q)
{
    std::vector<OrbLineClass> out;
    for (const auto& L : E.summands())
        out.push_back(pullback_class(L, f, Q));
    return OrbBundle(std::move(out));
}

OrbLineClass iota_pullback(const OrbLineClass& L, const TameBranchData& Pprime)
{
    return class_of(iota_pullback(representative(L), Pprime));
}

OrbBundle iota_pullback(const OrbBundle& E, const TameBranchData& Pprime)
{
    std::vector<OrbLineClass> out;
    for (const auto& L : E.summands())
        out.push_back(iota_pullback(L, Pprime));
    return OrbBundle(std::move(out));
}

ParabolicView parabolic_view(const OrbBundle& E)
{
    ParabolicView view;
    Rational total{0};
    for (const auto& L : E.summands()) {
        const FloorView fv = floor_view(L);
        total += Rational(fv.coarse_degree);
        for (const auto& [x, w] : fv.weights)
            total += w;
        view.summands.push_back(ParabolicSummand{fv.coarse_degree, fv.weights});
    }
    view.parabolic_slope = total / Rational(E.rank());
    return view;
}

} // namespace orbifold
