#pragma once

// Curves, tame branch data, cover skeletons and the branch-data calculus.
//
// In the tame setting a local Galois extension P(x)/K_{X,x} is cyclic and is
// fixed by its degree n_x, so branch data is a finitely supported map from
// points to integers n_x >= 2 coprime to the characteristic. Containment of
// extensions becomes divisibility, composita become lcm, and the degree of
// P(x).K_{Y,y} over K_{Y,y} becomes n / gcd(n, e).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbifold {

using PointLabel = std::string;

struct CurveTag {
    std::string name;
    int genus = 0;
    int characteristic = 0;

    bool operator==(const CurveTag&) const = default;
};

/// Throws InvariantError unless genus >= 0 and characteristic is 0 or prime.
void validate(const CurveTag& curve);

bool is_prime(int p);

/// True when n is invertible in a field of the given characteristic.
bool is_tame(int n, int characteristic);

class TameBranchData {
public:
    TameBranchData() = default;
    /// Orders equal to 1 are dropped; orders < 1 or divisible by the
    /// characteristic are rejected with InvariantError.
    TameBranchData(CurveTag curve, std::map<PointLabel, int> orders);

    const CurveTag& curve() const { return curve_; }
    const std::map<PointLabel, int>& orders() const { return orders_; }

    /// n_x, or 1 off the support.
    int order(const PointLabel& x) const;
    std::set<PointLabel> support() const;
    bool empty() const { return orders_.empty(); }

    bool operator==(const TameBranchData&) const = default;

private:
    CurveTag curve_;
    std::map<PointLabel, int> orders_;
};

/// The formal orbifold curve (X, P).
class OrbifoldCurve {
public:
    OrbifoldCurve() = default;
    explicit OrbifoldCurve(TameBranchData data) : data_(std::move(data)) {}

    const CurveTag& curve() const { return data_.curve(); }
    const TameBranchData& branch_data() const { return data_; }
    int order(const PointLabel& x) const { return data_.order(x); }
    bool is_stacky(const PointLabel& x) const { return data_.order(x) > 1; }

    bool operator==(const OrbifoldCurve&) const = default;

private:
    TameBranchData data_;
};

using Partition = std::vector<int>;
using FiberMap = std::map<PointLabel, Partition>;

class RamificationProfile;

/// Name of the i-th preimage of x under f, i indexing the descending
/// partition: "x[i]". A degree-1 cover keeps the label x.
PointLabel preimage_label(const RamificationProfile& f, const PointLabel& x, std::size_t i);

/// Cover skeleton f : Y -> X.
class RamificationProfile {
public:
    /// Validates partitions (each sums to the degree, tame indices, equal
    /// indices dividing the degree when galois) and derives the source genus
    /// by Riemann-Hurwitz. A declared source genus must agree with it.
    static RamificationProfile create(CurveTag target, int degree, FiberMap fibers,
                                      bool galois,
                                      std::optional<int> declared_source_genus = {},
                                      std::string source_name = "Y");

    /// The identity cover X -> X.
    static RamificationProfile identity(const CurveTag& curve);

    const CurveTag& source() const { return source_; }
    const CurveTag& target() const { return target_; }
    int degree() const { return degree_; }
    const FiberMap& fibers() const { return fibers_; }
    bool galois() const { return galois_; }

    /// Ramification indices over x; d ones when x is not listed.
    Partition fiber(const PointLabel& x) const;

    /// Points of X whose fibre carries an index > 1.
    std::set<PointLabel> branch_locus() const;

private:
    CurveTag source_;
    CurveTag target_;
    int degree_ = 1;
    FiberMap fibers_;
    bool galois_ = false;
};

/// Degree of the compositum of the order-n Kummer extension with a local
/// extension of index e, over the latter: n / gcd(n, e).
int tame_order_after_pullback(int n, int e);

/// f*P on the source of f.
TameBranchData pullback_branch_data(const RamificationProfile& f, const TameBranchData& P);

/// B_f: order at x is the lcm of the fibre's ramification indices.
TameBranchData branch_data_of_cover(const RamificationProfile& f);

/// P <= P' iff n_x divides n'_x everywhere.
bool branch_data_leq(const TameBranchData& P, const TameBranchData& Pprime);

/// f : (Y,Q) -> (X,P) is a morphism iff Q >= f*P.
bool is_morphism(const RamificationProfile& f, const TameBranchData& Q, const TameBranchData& P);

/// Etale iff Q(y) = P(f(y)) as extensions of K_{X,f(y)}, i.e. the morphism
/// condition holds and q_y * e_y = n_{f(y)} at every point y.
bool is_etale_morphism(const RamificationProfile& f, const TameBranchData& Q,
                       const TameBranchData& P);

/// K_{Y,y} inside P(f(y)) for all y: every e_y divides n_{f(y)}.
bool is_essentially_etale(const RamificationProfile& f, const TameBranchData& P);

/// Whether the Galois cover f exhibits (Y,O) -> (X,P) as an etale morphism,
/// witnessing that P is geometric. Throws InvariantError if f is not Galois.
bool is_geometric_witness(const RamificationProfile& f, const TameBranchData& P);

/// g_Y from 2g_Y - 2 = d(2g_X - 2) + sum (e_y - 1). Throws InvariantError when
/// the count is odd or negative.
int riemann_hurwitz_genus(int target_genus, int degree, const FiberMap& fibers);
int riemann_hurwitz_genus(const RamificationProfile& f);

} // namespace orbifold
