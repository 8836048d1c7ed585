#include "helpers.hpp"

#include "orbifold/errors.hpp"
#include "orbifold/orbbundle.hpp"

#include <doctest.h>

using namespace orbifold;
using namespace th;

namespace {

const OrbifoldCurve& C()
{
    static const OrbifoldCurve c = orb({{"0", 2}, {"inf", 2}, {"s", 3}});
    return c;
}

OrbLineClass cls(std::map<PointLabel, std::int64_t> coeffs)
{
    return class_of(div(C(), std::move(coeffs)));
}

OrbBundle sum(std::vector<OrbLineClass> ls)
{
    return OrbBundle(std::move(ls));
}

} // namespace

TEST_CASE("rank and determinant")
{
    const auto L = cls({{"0", 1}});
    CHECK(sum({L}).rank() == 1);
    CHECK(det(sum({L})) == L);
    CHECK(det(sum({L, class_neg(L)})) == OrbLineClass::trivial(C()));

    const auto d = det(sum({L, L}));
    CHECK(d.residues().empty());
    CHECK(d.total_degree() == Rational(1));

    CHECK_THROWS_AS(OrbBundle({}), InvariantError);
    CHECK_THROWS_AS(sum({L, OrbLineClass::trivial(orb({}))}), InvariantError);
}

TEST_CASE("degree and slope")
{
    CHECK(slope_P(sum({OrbLineClass::trivial(C())})) == Rational(0));
    const auto half = cls({{"0", 1}});
    CHECK(slope_P(sum({half, half})) == Rational(1, 2));
    CHECK(slope_P(sum({cls({{"s", 1}}), cls({{"p", 1}})})) == Rational(2, 3));
    CHECK(deg_P(direct_sum(sum({half}), sum({half, half}))) == Rational(3, 2));
}

TEST_CASE("Harder-Narasimhan")
{
    const auto one = cls({{"p", 1}});
    const auto zero = OrbLineClass::trivial(C());
    const auto r = hn(sum({one, zero, one}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].slope == Rational(1));
    CHECK(r[0].indices == std::vector<int>{0, 2});
    CHECK(r[1].slope == Rational(0));
    CHECK(r[1].indices == std::vector<int>{1});

    CHECK(hn(sum({zero, zero})).size() == 1);
    CHECK(mu_max(sum({cls({{"0", 1}}), cls({{"s", -1}})})) == Rational(1, 2));
}

TEST_CASE("stability verdicts")
{
    const auto L = cls({{"s", 2}});
    CHECK(is_stable(sum({L})));
    CHECK(is_semistable(sum({L, L})));
    CHECK(is_polystable(sum({L, L})));
    CHECK_FALSE(is_stable(sum({L, L})));
    const auto E = sum({cls({{"p", 1}}), OrbLineClass::trivial(C())});
    CHECK_FALSE(is_semistable(E));
    CHECK_FALSE(is_polystable(E));
}

TEST_CASE("tensor by a line")
{
    const auto E = sum({OrbLineClass::trivial(C()), cls({{"0", 1}, {"inf", -1}})});
    CHECK(tensor_line(E, OrbLineClass::trivial(C())) == E);
    const auto half = cls({{"0", 1}});
    const auto F = tensor_line(E, half);
    CHECK(slope_P(F) == Rational(1, 2));
    CHECK(is_semistable(F));
    const auto G = sum({cls({{"p", 1}}), cls({{"s", 1}})});
    CHECK(mu_max(tensor_line(G, half)) == mu_max(G) + Rational(1, 2));
}

TEST_CASE("pullback")
{
    const auto P = bd({{"0", 2}, {"inf", 2}});
    const OrbifoldCurve X(P);
    const auto id = RamificationProfile::identity(X0());
    const OrbBundle E({class_of(div(X, {{"0", 1}}))});
    CHECK(pullback_bundle(E, id, TameBranchData(id.source(), P.orders())) == E);

    const auto f = zpow(2);
    const TameBranchData O(f.source(), {});
    const auto up = pullback_class(class_of(div(X, {{"0", 1}})), f, O);
    CHECK(up.total_degree() == Rational(1));
    CHECK(up.residues().empty());

    const OrbBundle S({class_of(div(X, {{"0", 1}})), class_of(div(X, {{"inf", 1}}))});
    const auto fS = pullback_bundle(S, f, O);
    CHECK(is_semistable(fS));
    CHECK(slope_P(fS) == Rational(2) * slope_P(S));

    // O is not >= f*{0:4}
    const OrbifoldCurve X4(bd({{"0", 4}}));
    CHECK_THROWS_AS(pullback_bundle(OrbBundle({OrbLineClass::trivial(X4)}), f, O), InvariantError);
}

TEST_CASE("iota pullback of bundles")
{
    const auto E = sum({cls({{"0", 1}}), cls({{"s", 1}})});
    const auto Pp = bd({{"0", 4}, {"inf", 2}, {"s", 6}});
    const auto iE = iota_pullback(E, Pp);
    CHECK(iE.ambient().order("0") == 4);
    CHECK(deg_P(iE) == deg_P(E));
    CHECK(is_semistable(iE) == is_semistable(E));
}

TEST_CASE("parabolic view")
{
    const auto triv = parabolic_view(sum({OrbLineClass::trivial(C())}));
    CHECK(triv.summands.front().coarse_degree == 0);
    CHECK(triv.summands.front().weights.empty());

    const auto half = parabolic_view(sum({cls({{"0", 1}})}));
    CHECK(half.summands.front().coarse_degree == 0);
    CHECK(half.summands.front().weights.at("0") == Rational(1, 2));
    CHECK(half.parabolic_slope == Rational(1, 2));

    const auto pair = parabolic_view(sum({cls({{"0", 1}, {"inf", -1}})}));
    CHECK(pair.summands.front().coarse_degree == -1);
    CHECK(pair.summands.front().weights.at("0") == Rational(1, 2));
    CHECK(pair.summands.front().weights.at("inf") == Rational(1, 2));
    CHECK(pair.parabolic_slope == Rational(0));
}
