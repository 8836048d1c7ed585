#include "helpers.hpp"

#include "orbifold/errors.hpp"

#include <doctest.h>

using namespace orbifold;
using namespace th;

TEST_CASE("stacky degrees")
{
    const auto C = orb({{"x", 3}, {"s", 2}});
    CHECK(deg_P(div(C, {})) == Rational(0));
    CHECK(deg_P(div(C, {{"x", 1}})) == Rational(1, 3));
    CHECK(deg_P(div(C, {{"s", 2}, {"y", -1}})) == Rational(0));
    CHECK(div(C, {{"x", 0}}).coefficients().empty());
}

TEST_CASE("iota pullback")
{
    const auto C = orb({{"x", 2}});
    const auto D = div(C, {{"x", 1}, {"y", 4}});
    CHECK(iota_pullback(D, C.branch_data()) == D);
    const auto moved = iota_pullback(D, bd({{"x", 6}, {"z", 5}}));
    CHECK(moved.coefficient("x") == 3);
    CHECK(moved.coefficient("y") == 4);
    CHECK(deg_P(moved) == deg_P(D));
    CHECK_THROWS_AS(iota_pullback(D, bd({{"x", 3}})), InvariantError);
}

TEST_CASE("cover pullback")
{
    const auto f3 = RamificationProfile::create(X0(), 3, {{"x", {3}}, {"w", {3}}}, true);
    const auto up = cover_pullback(div(orb({{"x", 2}}), {{"x", 1}}), f3);
    CHECK(up.coefficient("x[0]") == 3);
    CHECK(up.ambient().order("x[0]") == 2);
    CHECK(deg_P(up) == Rational(3, 2));

    const auto f2 = zpow(2);
    const auto C = orb({{"0", 2}});
    CHECK(cover_pullback(div(C, {}), f2).coefficients().empty());
    const auto up2 = cover_pullback(div(C, {{"0", 1}}), f2);
    CHECK(up2.coefficient("0[0]") == 1);
    CHECK(up2.ambient().order("0[0]") == 1);
    CHECK(deg_P(up2) == Rational(1));

    // unramified point: d preimages
    const auto up3 = cover_pullback(div(C, {{"p", 2}}), f2);
    CHECK(up3.coefficient("p[0]") == 2);
    CHECK(up3.coefficient("p[1]") == 2);
}

TEST_CASE("linear equivalence on genus 0")
{
    const auto C = orb({{"s", 2}, {"t", 2}});
    const auto D = div(C, {{"s", 1}, {"x", 2}});
    CHECK(class_of(D) == class_of(D + div(C, {{"x", 1}, {"y", -1}})));
    CHECK(class_of(div(C, {{"s", 1}})) == class_of(div(C, {{"s", 3}, {"p", -1}})));
    CHECK_FALSE(class_of(div(C, {{"s", 1}})) == class_of(div(C, {{"t", 1}})));

    const OrbifoldCurve elliptic(TameBranchData(CurveTag{"E", 1, 0}, {}));
    CHECK_THROWS_AS(class_of(div(elliptic, {{"x", 1}})), InvariantError);
}

TEST_CASE("class arithmetic")
{
    const auto C = orb({{"s", 2}});
    const auto half = class_of(div(C, {{"s", 1}}));
    CHECK(class_add(half, OrbLineClass::trivial(C)) == half);
    const auto doubled = class_add(half, half);
    CHECK(doubled.residues().empty());
    CHECK(doubled.total_degree() == Rational(1));
    const auto neg = class_neg(half);
    CHECK(neg.residue("s") == 1);
    CHECK(neg.total_degree() == Rational(-1, 2));
    CHECK(class_add(half, neg) == OrbLineClass::trivial(C));
    CHECK_THROWS_AS(OrbLineClass(C, {{"s", 1}}, Rational(1)), InvariantError);
    CHECK(representative(half) == div(C, {{"s", 1}}));
}

TEST_CASE("floor view, h0 and Hom")
{
    const auto C = orb({{"0", 2}, {"inf", 2}});
    const auto T = OrbLineClass::trivial(C);
    CHECK(floor_view(T).coarse_degree == 0);
    CHECK(floor_view(T).weights.empty());

    const OrbLineClass halves(C, {{"0", 1}, {"inf", 1}}, Rational(0));
    CHECK(floor_view(halves).coarse_degree == -1);
    CHECK(floor_view(halves).weights.at("0") == Rational(1, 2));
    CHECK(h0(halves) == 0);

    const auto C3 = orb({{"s", 3}});
    const OrbLineClass two_thirds(C3, {{"s", 2}}, Rational(5, 3));
    CHECK(floor_view(two_thirds).coarse_degree == 1);
    CHECK(floor_view(two_thirds).weights.at("s") == Rational(2, 3));

    CHECK(h0(T) == 1);
    CHECK(h0(class_of(div(orb({{"s", 2}}), {{"s", 2}}))) == 2);

    const auto L = class_of(div(C, {{"0", 1}}));
    const auto M = class_of(div(C, {{"inf", 1}}));
    CHECK(hom_dim(L, L) == 1);
    CHECK(hom_dim(L, M) == 0);
    CHECK(hom_dim(T, class_of(div(C, {{"p", 1}}))) == 2);
}
