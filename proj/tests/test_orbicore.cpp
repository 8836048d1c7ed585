#include "helpers.hpp"

#include "orbifold/errors.hpp"

#include <doctest.h>

using namespace orbifold;
using namespace th;

TEST_CASE("tame order after pullback")
{
    CHECK(tame_order_after_pullback(1, 5) == 1);
    CHECK(tame_order_after_pullback(4, 2) == 2);
    CHECK(tame_order_after_pullback(3, 3) == 1);
    CHECK(tame_order_after_pullback(6, 4) == 3);
}

TEST_CASE("branch data construction")
{
    const auto P = bd({{"x", 1}, {"y", 3}});
    CHECK(P.support() == std::set<PointLabel>{"y"});
    CHECK(P.order("x") == 1);
    CHECK(P.order("nowhere") == 1);
    CHECK_THROWS_AS(bd({{"x", 0}}), InvariantError);
    // wild in characteristic 3
    CHECK_THROWS_AS(bd({{"x", 6}}, X0(3)), InvariantError);
    CHECK_NOTHROW(bd({{"x", 4}}, X0(3)));
    CHECK_THROWS_AS(validate(CurveTag{"X", 0, 4}), InvariantError);
    CHECK_THROWS_AS(validate(CurveTag{"X", -1, 0}), InvariantError);
}

TEST_CASE("pullback of branch data")
{
    const auto f = zpow(2);
    CHECK(pullback_branch_data(f, bd({})).empty());
    const auto Q = pullback_branch_data(f, bd({{"0", 4}}));
    CHECK(Q.orders() == std::map<PointLabel, int>{{"0[0]", 2}});
    CHECK(Q.curve().name == "Y");
    CHECK(Q.curve().genus == 0);
    CHECK(pullback_branch_data(f, bd({{"0", 2}, {"inf", 2}})).empty());

    // unramified points get d anonymous preimages
    const auto R = pullback_branch_data(f, bd({{"p", 3}}));
    CHECK(R.orders() == std::map<PointLabel, int>{{"p[0]", 3}, {"p[1]", 3}});

    const TameBranchData elsewhere(CurveTag{"Z", 0, 0}, {{"0", 2}});
    CHECK_THROWS_AS(pullback_branch_data(f, elsewhere), InvariantError);
}

TEST_CASE("branch data of a cover")
{
    CHECK(branch_data_of_cover(RamificationProfile::identity(X0())).empty());
    CHECK(branch_data_of_cover(zpow(5)).orders() == std::map<PointLabel, int>{{"0", 5}, {"inf", 5}});
    // fibre [3,2,2] over x in degree 7 (genus 1 target keeps RH happy)
    const auto f = RamificationProfile::create(CurveTag{"X", 1, 0}, 7, {{"x", {2, 2, 3}}, {"y", {2, 2, 3}}},
                                               false);
    CHECK(branch_data_of_cover(f).order("x") == 6);
    CHECK(f.fiber("x") == Partition{3, 2, 2});
}

TEST_CASE("partial order")
{
    const auto P = bd({{"x", 2}});
    CHECK(branch_data_leq(P, P));
    CHECK(branch_data_leq(P, bd({{"x", 6}, {"y", 3}})));
    CHECK_FALSE(branch_data_leq(bd({{"x", 4}}), bd({{"x", 6}})));
    CHECK_FALSE(branch_data_leq(bd({{"x", 2}}), bd({})));
    CHECK_THROWS_AS(branch_data_leq(P, TameBranchData(CurveTag{"Z", 0, 0}, {})), InvariantError);
}

TEST_CASE("morphisms")
{
    const auto f = zpow(2);
    const auto P = bd({{"0", 4}, {"inf", 4}});
    const auto fP = pullback_branch_data(f, P);
    CHECK(is_morphism(f, fP, P));
    const TameBranchData Q(f.source(), {{"0[0]", 2}, {"inf[0]", 2}});
    CHECK(Q == fP);
    CHECK(is_morphism(f, Q, P));
    CHECK_FALSE(is_morphism(f, TameBranchData(f.source(), {}), P));
}

TEST_CASE("etale morphisms")
{
    const auto id = RamificationProfile::identity(X0());
    const auto P = bd({{"a", 3}});
    CHECK(is_etale_morphism(id, TameBranchData(id.source(), {{"a", 3}}), P));
    CHECK_FALSE(is_etale_morphism(id, TameBranchData(id.source(), {{"a", 6}}), P));

    const auto f = zpow(2);
    const TameBranchData O(f.source(), {});
    CHECK(is_etale_morphism(f, O, bd({{"0", 2}, {"inf", 2}})));
    CHECK_FALSE(is_etale_morphism(f, O, bd({{"0", 4}, {"inf", 4}})));

    // (Y, f*P) -> (X, P) is etale exactly when every e_y divides n_x
    const auto P4 = bd({{"0", 4}, {"inf", 4}});
    CHECK(is_etale_morphism(f, pullback_branch_data(f, P4), P4));
    CHECK(is_essentially_etale(f, P4));
    const auto P3 = bd({{"0", 3}});
    CHECK_FALSE(is_etale_morphism(f, pullback_branch_data(f, P3), P3));
    CHECK_FALSE(is_essentially_etale(f, P3));
}

TEST_CASE("geometric witness")
{
    const auto X1 = CurveTag{"X", 1, 0};
    const auto etale = RamificationProfile::create(X1, 2, {}, true);
    CHECK(is_geometric_witness(etale, TameBranchData(X1, {})));

    // (Y,O) -> (X,P) is etale iff e_y = n_x; {0:3, inf:2} is a bad orbifold
    CHECK_FALSE(is_geometric_witness(zpow(6), bd({{"0", 3}, {"inf", 2}})));
    CHECK(is_geometric_witness(zpow(6), bd({{"0", 6}, {"inf", 6}})));
    CHECK_FALSE(is_geometric_witness(zpow(2), bd({{"0", 4}, {"inf", 4}})));
    CHECK(is_geometric_witness(zpow(2), bd({{"0", 2}, {"inf", 2}})));

    const auto nongalois = RamificationProfile::create(X0(), 3, {{"a", {2, 1}}, {"b", {2, 1}}, {"c", {2, 1}}, {"d", {2, 1}}}, false);
    CHECK_THROWS_AS(is_geometric_witness(nongalois, bd({})), InvariantError);
}

TEST_CASE("Riemann-Hurwitz")
{
    CHECK(riemann_hurwitz_genus(0, 2, {{"0", {2}}, {"inf", {2}}}) == 0);
    CHECK(riemann_hurwitz_genus(0, 2, {{"a", {2}}, {"b", {2}}, {"c", {2}}, {"d", {2}}}) == 1);
    CHECK_THROWS_AS(riemann_hurwitz_genus(0, 2, {{"a", {2}}, {"b", {2}}, {"c", {2}}}), InvariantError);
    CHECK_THROWS_AS(riemann_hurwitz_genus(0, 2, {}), InvariantError);   // genus -1
    CHECK(riemann_hurwitz_genus(1, 5, {}) == 1);
    CHECK(riemann_hurwitz_genus(2, 3, {}) == 4);
}

TEST_CASE("profile validation")
{
    CHECK_THROWS_AS(RamificationProfile::create(X0(), 3, {{"a", {2}}}, false), InvariantError);
    CHECK_THROWS_AS(RamificationProfile::create(X0(), 2, {{"0", {2}}, {"inf", {2}}}, false, 1),
                    InvariantError);
    // galois fibres must be uniform and divide the degree
    CHECK_THROWS_AS(RamificationProfile::create(X0(), 3, {{"a", {2, 1}}, {"b", {2, 1}}, {"c", {2, 1}}, {"d", {2, 1}}}, true),
                    InvariantError);
    // wild index in characteristic 2
    CHECK_THROWS_AS(RamificationProfile::create(X0(2), 2, {{"0", {2}}, {"inf", {2}}}, true),
                    InvariantError);
    const auto f = zpow(3);
    CHECK(f.branch_locus() == std::set<PointLabel>{"0", "inf"});
    CHECK(f.fiber("elsewhere") == Partition{1, 1, 1});
}
