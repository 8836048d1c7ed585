#include "orbifold/orbdiv.hpp"

#include "orbifold/errors.hpp"

#include <numeric>

namespace orbifold {

namespace {

void require_same_ambient(const OrbifoldCurve& a, const OrbifoldCurve& b)
{
    if (!(a == b))
        throw InvariantError("ambient mismatch between '" + a.curve().name + "' objects");
}

void require_genus_zero(const OrbifoldCurve& ambient)
{
    if (ambient.curve().genus != 0)
        throw InvariantError("line classes are only decided on genus 0 (curve '" +
                             ambient.curve().name + "' has genus " +
                             std::to_string(ambient.curve().genus) + ")");
}

} // namespace

OrbDivisor::OrbDivisor(OrbifoldCurve ambient, std::map<PointLabel, std::int64_t> coefficients)
    : ambient_(std::move(ambient))
{
    for (auto& [x, m] : coefficients)
        if (m != 0)
            coefficients_.emplace(x, m);
}

std::int64_t OrbDivisor::coefficient(const PointLabel& x) const
{
    const auto it = coefficients_.find(x);
    return it == coefficients_.end() ? 0 : it->second;
}

OrbDivisor OrbDivisor::operator+(const OrbDivisor& rhs) const
{
    require_same_ambient(ambient_, rhs.ambient_);
    auto sum = coefficients_;
    for (const auto& [x, m] : rhs.coefficients_)
        sum[x] += m;
    return OrbDivisor(ambient_, std::move(sum));
}

OrbDivisor OrbDivisor::operator-() const
{
    auto neg = coefficients_;
    for (auto& [x, m] : neg)
        m = -m;
    return OrbDivisor(ambient_, std::move(neg));
}

Rational deg_P(const OrbDivisor& D)
{
    Rational total{0};
    for (const auto& [x, m] : D.coefficients())
        total += Rational(m, D.ambient().order(x));
    return total;
}

OrbDivisor iota_pullback(const OrbDivisor& D, const TameBranchData& Pprime)
{
    const auto& P = D.ambient().branch_data();
    if (!branch_data_leq(P, Pprime))
        throw InvariantError("iota pullback needs P <= P'");
    std::map<PointLabel, std::int64_t> out;
    for (const auto& [x, m] : D.coefficients())
        out.emplace(x, m * (Pprime.order(x) / P.order(x)));
    return OrbDivisor(OrbifoldCurve(Pprime), std::move(out));
}

OrbDivisor cover_pullback(const OrbDivisor& D, const RamificationProfile& f)
{
    const auto& P = D.ambient().branch_data();
    OrbifoldCurve upstairs(pullback_branch_data(f, P));
    std::map<PointLabel, std::int64_t> out;
    for (const auto& [x, m] : D.coefficients()) {
        const int n = P.order(x);
        const Partition part = f.fiber(x);
        for (std::size_t i = 0; i < part.size(); ++i)
            out[preimage_label(f, x, i)] += m * (part[i] / std::gcd(n, part[i]));
    }
    return OrbDivisor(std::move(upstairs), std::move(out));
}

OrbLineClass::OrbLineClass(OrbifoldCurve ambient, std::map<PointLabel, std::int64_t> residues,
                           Rational total_degree)
    : ambient_(std::move(ambient)), degree_(total_degree)
{
    require_genus_zero(ambient_);
    Rational fractional{0};
    for (const auto& [x, r] : residues) {
        const int n = ambient_.order(x);
        const std::int64_t reduced = mod_floor(r, n);
        if (reduced == 0)
            continue;
        residues_.emplace(x, reduced);
        fractional += Rational(reduced, n);
    }
    if ((degree_ - fractional).denominator() != 1)
        throw InvariantError("class degree " + to_string(degree_) +
                             " is incompatible with its residues");
}

OrbLineClass OrbLineClass::trivial(const OrbifoldCurve& ambient)
{
    return OrbLineClass(ambient, {}, Rational(0));
}

std::int64_t OrbLineClass::residue(const PointLabel& x) const
{
    const auto it = residues_.find(x);
    return it == residues_.end() ? 0 : it->second;
}

OrbLineClass class_of(const OrbDivisor& D)
{
    require_genus_zero(D.ambient());
    std::map<PointLabel, std::int64_t> residues;
    for (const auto& [x, m] : D.coefficients())
        if (D.ambient().is_stacky(x))
            residues.emplace(x, m);
    return OrbLineClass(D.ambient(), std::move(residues), deg_P(D));
}

PointLabel free_base_point(const OrbifoldCurve& ambient)
{
    PointLabel label = "pt";
    while (ambient.is_stacky(label))
        label += "'";
    return label;
}

OrbDivisor representative(const OrbLineClass& L)
{
    const auto coarse = floor_view(L).coarse_degree;
    auto coefficients = L.residues();
    coefficients[free_base_point(L.ambient())] += coarse;
    return OrbDivisor(L.ambient(), std::move(coefficients));
}

OrbLineClass class_add(const OrbLineClass& L, const OrbLineClass& M)
{
    require_same_ambient(L.ambient(), M.ambient());
    auto residues = L.residues();
    for (const auto& [x, r] : M.residues())
        residues[x] += r;
    return OrbLineClass(L.ambient(), std::move(residues), L.total_degree() + M.total_degree());
}

OrbLineClass class_neg(const OrbLineClass& L)
{
    auto residues = L.residues();
    for (auto& [x, r] : residues)
        r = -r;
    return OrbLineClass(L.ambient(), std::move(residues), -L.total_degree());
}

FloorView floor_view(const OrbLineClass& L)
{
    FloorView view;
    Rational weight_sum{0};
    for (const auto& [x, r] : L.residues()) {
        const Rational w(r, L.ambient().order(x));
        view.weights.emplace(x, w);
        weight_sum += w;
    }
    const Rational coarse = L.total_degree() - weight_sum;
    view.coarse_degree = coarse.numerator();
    return view;
}

std::int64_t h0(const OrbLineClass& L)
{
    return std::max<std::int64_t>(0, floor_view(L).coarse_degree + 1);
}

std::int64_t hom_dim(const OrbLineClass& L, const OrbLineClass& M)
{
    return h0(class_add(M, class_neg(L)));
}

} // namespace orbifold
