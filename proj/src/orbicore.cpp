#include "orbifold/orbicore.hpp"

#include "orbifold/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbifold {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

bool is_tame(int n, int characteristic)
{
    return characteristic == 0 || n % characteristic != 0;
}

void validate(const CurveTag& curve)
{
    if (curve.genus < 0)
        throw InvariantError("curve '" + curve.name + "' has negative genus");
    if (curve.characteristic != 0 && !is_prime(curve.characteristic))
        throw InvariantError("characteristic " + std::to_string(curve.characteristic) +
                             " is neither 0 nor prime");
}

TameBranchData::TameBranchData(CurveTag curve, std::map<PointLabel, int> orders)
    : curve_(std::move(curve))
{
    validate(curve_);
    for (auto& [x, n] : orders) {
        if (n < 1)
            throw InvariantError("branch order at '" + x + "' must be positive");
        if (!is_tame(n, curve_.characteristic))
            throw InvariantError("wild branch order " + std::to_string(n) + " at '" + x +
                                 "' in characteristic " +
                                 std::to_string(curve_.characteristic));
        if (n > 1)
            orders_.emplace(x, n);
    }
}

int TameBranchData::order(const PointLabel& x) const
{
    const auto it = orders_.find(x);
    return it == orders_.end() ? 1 : it->second;
}

std::set<PointLabel> TameBranchData::support() const
{
    std::set<PointLabel> out;
    for (const auto& [x, n] : orders_)
        out.insert(x);
    return out;
}

PointLabel preimage_label(const RamificationProfile& f, const PointLabel& x, std::size_t i)
{
    if (f.degree() == 1)
        return x;
    return x + "[" + std::to_string(i) + "]";
}

int riemann_hurwitz_genus(int target_genus, int degree, const FiberMap& fibers)
{
    if (degree < 1)
        throw InvariantError("cover degree must be positive");
    long long ramification = 0;
    for (const auto& [x, part] : fibers)
        for (int e : part)
            ramification += e - 1;
    const long long twice = static_cast<long long>(degree) * (2LL * target_genus - 2) +
                            ramification + 2;
    if (twice % 2 != 0)
        throw InvariantError("Riemann-Hurwitz: odd total ramification, no integral genus");
    if (twice < 0)
        throw InvariantError("Riemann-Hurwitz: negative source genus");
    return static_cast<int>(twice / 2);
}

int riemann_hurwitz_genus(const RamificationProfile& f)
{
    return riemann_hurwitz_genus(f.target().genus, f.degree(), f.fibers());
}

RamificationProfile RamificationProfile::create(CurveTag target, int degree, FiberMap fibers,
                                                bool galois,
                                                std::optional<int> declared_source_genus,
                                                std::string source_name)
{
    validate(target);
    if (degree < 1)
        throw InvariantError("cover degree must be positive");
    for (auto& [x, part] : fibers) {
        if (part.empty())
            throw InvariantError("empty fibre over '" + x + "'");
        long long sum = 0;
        for (int e : part) {
            if (e < 1)
                throw InvariantError("ramification index at '" + x + "' must be positive");
            if (!is_tame(e, target.characteristic))
                throw InvariantError("wild ramification index " + std::to_string(e) +
                                     " over '" + x + "'");
            sum += e;
        }
        if (sum != degree)
            throw InvariantError("fibre over '" + x + "' sums to " + std::to_string(sum) +
                                 ", expected degree " + std::to_string(degree));
        std::sort(part.begin(), part.end(), std::greater<>());
        if (galois && (part.front() != part.back() || degree % part.front() != 0))
            throw InvariantError("Galois profile needs equal indices dividing the degree over '" +
                                 x + "'");
    }

    RamificationProfile f;
    f.target_ = std::move(target);
    f.degree_ = degree;
    f.fibers_ = std::move(fibers);
    f.galois_ = galois;
    const int genus = riemann_hurwitz_genus(f.target_.genus, degree, f.fibers_);
    if (declared_source_genus && *declared_source_genus != genus)
        throw InvariantError("declared source genus " + std::to_string(*declared_source_genus) +
                             " disagrees with Riemann-Hurwitz genus " + std::to_string(genus));
    f.source_ = CurveTag{std::move(source_name), genus, f.target_.characteristic};
    return f;
}

RamificationProfile RamificationProfile::identity(const CurveTag& curve)
{
    return create(curve, 1, {}, true, curve.genus, curve.name);
}

Partition RamificationProfile::fiber(const PointLabel& x) const
{
    const auto it = fibers_.find(x);
    if (it == fibers_.end())
        return Partition(static_cast<std::size_t>(degree_), 1);
    return it->second;
}

std::set<PointLabel> RamificationProfile::branch_locus() const
{
    std::set<PointLabel> out;
    for (const auto& [x, part] : fibers_)
        if (part.front() > 1)
            out.insert(x);
    return out;
}

int tame_order_after_pullback(int n, int e)
{
    return n / std::gcd(n, e);
}

namespace {

void require_same_curve(const CurveTag& a, const CurveTag& b, const char* what)
{
    if (!(a == b))
        throw InvariantError(std::string("curve mismatch (") + what + "): '" + a.name +
                             "' vs '" + b.name + "'");
}

// Every point of Y lying over Supp(P) or BL(f), with its image and index.
struct Preimage {
    PointLabel x;
    int e;
};

std::map<PointLabel, Preimage> listed_preimages(const RamificationProfile& f,
                                                const TameBranchData& P)
{
    std::set<PointLabel> base = P.support();
    for (const auto& [x, part] : f.fibers())
        base.insert(x);
    std::map<PointLabel, Preimage> out;
    for (const auto& x : base) {
        const Partition part = f.fiber(x);
        for (std::size_t i = 0; i < part.size(); ++i)
            out.emplace(preimage_label(f, x, i), Preimage{x, part[i]});
    }
    return out;
}

} // namespace

TameBranchData pullback_branch_data(const RamificationProfile& f, const TameBranchData& P)
{
    require_same_curve(P.curve(), f.target(), "branch data vs cover target");
    std::map<PointLabel, int> orders;
    for (const auto& [x, n] : P.orders()) {
        const Partition part = f.fiber(x);
        for (std::size_t i = 0; i < part.size(); ++i) {
            const int q = tame_order_after_pullback(n, part[i]);
            if (q > 1)
                orders.emplace(preimage_label(f, x, i), q);
        }
    }
    return TameBranchData(f.source(), std::move(orders));
}

TameBranchData branch_data_of_cover(const RamificationProfile& f)
{
    std::map<PointLabel, int> orders;
    for (const auto& [x, part] : f.fibers()) {
        int l = 1;
        for (int e : part)
            l = std::lcm(l, e);
        if (l > 1)
            orders.emplace(x, l);
    }
    return TameBranchData(f.target(), std::move(orders));
}

bool branch_data_leq(const TameBranchData& P, const TameBranchData& Pprime)
{
    require_same_curve(P.curve(), Pprime.curve(), "branch data comparison");
    return std::all_of(P.orders().begin(), P.orders().end(), [&](const auto& entry) {
        return Pprime.order(entry.first) % entry.second == 0;
    });
}

bool is_morphism(const RamificationProfile& f, const TameBranchData& Q, const TameBranchData& P)
{
    require_same_curve(Q.curve(), f.source(), "source branch data vs cover source");
    return branch_data_leq(pullback_branch_data(f, P), Q);
}

bool is_etale_morphism(const RamificationProfile& f, const TameBranchData& Q,
                       const TameBranchData& P)
{
    if (!is_morphism(f, Q, P))
        return false;
    const auto preimages = listed_preimages(f, P);
    for (const auto& [y, pre] : preimages)
        if (static_cast<long long>(Q.order(y)) * pre.e != P.order(pre.x))
            return false;
    // Any other point of Y is unramified over a point with n = 1.
    return std::all_of(Q.orders().begin(), Q.orders().end(),
                       [&](const auto& entry) { return preimages.count(entry.first) != 0; });
}

bool is_essentially_etale(const RamificationProfile& f, const TameBranchData& P)
{
    require_same_curve(P.curve(), f.target(), "branch data vs cover target");
    for (const auto& [y, pre] : listed_preimages(f, P))
        if (P.order(pre.x) % pre.e != 0)
            return false;
    return true;
}

bool is_geometric_witness(const RamificationProfile& f, const TameBranchData& P)
{
    if (!f.galois())
        throw InvariantError("geometric witness needs a Galois profile");
    return is_etale_morphism(f, TameBranchData(f.source(), {}), P);
}

} // namespace orbifold
