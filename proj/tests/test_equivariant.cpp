#include "orbifold/equivariant.hpp"
#include "orbifold/errors.hpp"

#include <doctest.h>

using namespace orbifold;

namespace {

CyclicCoverSpec spec(int m)
{
    return CyclicCoverSpec{m, 0};
}

EqLineBundle eq(int m, std::int64_t a, std::int64_t b, std::int64_t c,
                std::map<PointLabel, std::int64_t> orbits = {})
{
    return EqLineBundle(spec(m), a, b, std::move(orbits), c);
}

OrbLineClass cls(int m, std::map<PointLabel, std::int64_t> coeffs)
{
    return class_of(OrbDivisor(target_orbifold(spec(m)), std::move(coeffs)));
}

} // namespace

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(validate(CyclicCoverSpec{1, 0}), InvariantError);
    CHECK_THROWS_AS(validate(CyclicCoverSpec{4, 2}), InvariantError);
    CHECK_NOTHROW(validate(CyclicCoverSpec{4, 3}));
    const auto X = target_orbifold(spec(5));
    CHECK(X.order("0") == 5);
    CHECK(X.order("inf") == 5);
    CHECK(kummer_profile(spec(5)).galois());
    CHECK_THROWS_AS(eq(2, 0, 0, 0, {{"0", 1}}), InvariantError);
}

TEST_CASE("degrees")
{
    CHECK(eq_degree(EqLineBundle::trivial(spec(3))) == 0);
    CHECK(eq_degree(eq(3, 1, 0, 0)) == 1);
    CHECK(eq_degree(eq(3, 0, 0, 0, {{"p", 2}})) == 6);
    CHECK(eq(3, 0, 0, 5).character() == 2);
    CHECK(eq(3, 0, 0, -1).character() == 2);
    CHECK(eq(3, 0, 0, 0, {{"p", 0}}).orbits().empty());
}

TEST_CASE("invariant sections")
{
    CHECK(h0_invariants(eq(2, 0, 0, 0)) == 1);
    CHECK(h0_invariants(eq(2, 0, 3, 0)) == 2);
    // with c = -a the constant is the only invariant; (1,1,0) has z^-1, z
    CHECK(h0_invariants(eq(2, 1, 1, 1)) == 1);
    CHECK(h0_invariants(eq(2, 1, 1, 0)) == 2);
    CHECK(h0_plain(eq(2, 1, 1, 1)) == 3);
    CHECK(h0_invariants(eq(3, 0, 0, 0, {{"p", 1}})) == 2);
    CHECK(h0_invariants(eq(2, -1, 0, 0)) == 0);
}

TEST_CASE("T on classes")
{
    CHECK(T_pullback(OrbLineClass::trivial(target_orbifold(spec(2))), spec(2)) == EqLineBundle::trivial(spec(2)));

    const auto t1 = T_pullback(cls(2, {{"0", 1}}), spec(2));
    CHECK(t1.a() == 1);
    CHECK(t1.b() == 0);
    CHECK(t1.character() == 1);
    CHECK(eq_degree(t1) == 1);

    const OrbDivisor D(target_orbifold(spec(2)), {{"0", 1}, {"inf", -1}});
    const auto t2 = T_pullback(D, spec(2));
    CHECK(t2.a() == 1);
    CHECK(t2.b() == -1);
    CHECK(t2.character() == 1);
    CHECK(eq_degree(t2) == 0);
    CHECK(isomorphic(t2, T_pullback(class_of(D), spec(2))));

    CHECK(eq_degree(T_pullback(OrbDivisor(target_orbifold(spec(3)), {{"p", 2}}), spec(3))) == 6);
    CHECK_THROWS_AS(T_pullback(cls(3, {}), spec(2)), InvariantError);
}

TEST_CASE("S and round trips")
{
    CHECK(S_pushforward(EqLineBundle::trivial(spec(4))) == OrbLineClass::trivial(target_orbifold(spec(4))));

    const auto s = S_pushforward(eq(2, 0, 0, 1));
    CHECK(s.residue("0") == 1);
    CHECK(s.residue("inf") == 1);
    CHECK(s.total_degree() == Rational(0));
    CHECK(floor_view(s).coarse_degree == -1);

    for (const auto& L : {cls(3, {{"0", 2}, {"p", -1}}), cls(3, {{"inf", 4}}), cls(3, {})})
        CHECK(S_pushforward(T_pullback(L, spec(3))) == L);
    const auto W = eq(3, 2, -1, 2, {{"q", 1}});
    CHECK(T_pullback(S_pushforward(W), spec(3)) == canonical(W));
    CHECK(isomorphic(T_pullback(S_pushforward(W), spec(3)), W));
}

TEST_CASE("tensor, dual, isomorphism")
{
    const auto L = eq(3, 1, 2, 1, {{"p", 1}});
    CHECK(isomorphic(tensor(L, dual(L)), EqLineBundle::trivial(spec(3))));
    CHECK(isomorphic(eq(3, 1, 0, 0), eq(3, 0, 1, 0)));
    CHECK_FALSE(isomorphic(eq(3, 1, 0, 0), eq(3, 1, 0, 1)));
    CHECK_FALSE(isomorphic(eq(3, 1, 0, 0), eq(3, 2, 0, 0)));
    CHECK_THROWS_AS(tensor(eq(2, 0, 0, 0), eq(3, 0, 0, 0)), InvariantError);
}

TEST_CASE("equivariant stability")
{
    CHECK(eq_is_stable(EqBundle({eq(2, 1, 0, 0)})));
    const EqBundle V({eq(2, 1, 0, 0), eq(2, 1, 0, 1)});
    CHECK(eq_is_semistable(V));
    CHECK(eq_is_polystable(V));
    CHECK_FALSE(eq_is_stable(V));
    CHECK_FALSE(eq_is_semistable(EqBundle({eq(2, 1, 0, 0), eq(2, 0, 0, 0)})));
    CHECK(eq_slope(V) == Rational(1));
}

TEST_CASE("pushforward structure")
{
    const auto p2 = pushforward_structure(spec(2));
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == OrbLineClass::trivial(target_orbifold(spec(2))));
    CHECK(p2[1].residue("0") == 1);
    CHECK(p2[1].residue("inf") == 1);
    CHECK(p2[1].total_degree() == Rational(0));

    const auto p3 = pushforward_structure(spec(3));
    REQUIRE(p3.size() == 3);
    for (const auto& c : p3)
        CHECK(c.total_degree() == Rational(0));
}

TEST_CASE("Hom dimensions")
{
    const auto L = T_pullback(cls(2, {{"0", 1}}), spec(2));
    const auto M = T_pullback(cls(2, {{"inf", 1}}), spec(2));
    CHECK(hom_dim_equivariant(L, L) == 1);
    CHECK(hom_dim_equivariant(L, M) == 0);
    CHECK(hom_dim_plain(L, M) == 1);
    CHECK(hom_dim(cls(2, {{"0", 1}}), cls(2, {{"inf", 1}})) == 0);
}
