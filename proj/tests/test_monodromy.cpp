#include "orbifold/audit.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/monodromy.hpp"

#include <doctest.h>

using namespace orbifold;

namespace {

Permutation P(const char* cycles, int d)
{
    return Permutation::parse_cycles(cycles, d);
}

MonodromyDatum genus0(int d, std::vector<std::pair<const char*, const char*>> cycles)
{
    std::vector<BranchCycle> bcs;
    for (const auto& [x, s] : cycles)
        bcs.push_back(BranchCycle{x, P(s, d)});
    return MonodromyDatum::create(0, d, 0, {}, std::move(bcs));
}

MonodromyDatum klein()
{
    return genus0(4, {{"a", "(1 2)(3 4)"}, {"b", "(1 3)(2 4)"}, {"c", "(1 4)(2 3)"}});
}

MonodromyDatum s3()
{
    return genus0(3, {{"a", "(1 2)"}, {"b", "(2 3)"}, {"c", "(1 3 2)"}});
}

// genus 1, alpha = (13)(24), beta = id, two branch cycles (12)
MonodromyDatum blocks_example()
{
    return MonodromyDatum::create(1, 4, 0, {{P("(1 3)(2 4)", 4), Permutation::identity(4)}},
                                  {{"a", P("(1 2)", 4)}, {"b", P("(1 2)", 4)}});
}

} // namespace

TEST_CASE("permutations")
{
    const auto p = P("(1 2 3)", 3);
    CHECK(p(0) == 1);
    CHECK(p.to_cycles() == "(1 2 3)");
    CHECK(p.inverse().to_cycles() == "(1 3 2)");
    CHECK((p * p * p).is_identity());
    CHECK(P("", 4).is_identity());
    CHECK(Permutation::identity(2).to_cycles() == "()");
    CHECK(P("(1 2)(3 4 5)", 6).cycle_type() == std::vector<int>{3, 2, 1});
    // right factor first: (12)(23) sends 1 -> 1 -> 2? (23) fixes 1, then (12) sends it to 2
    CHECK((P("(1 2)", 3) * P("(2 3)", 3))(0) == 1);
    CHECK_THROWS(P("(1 4)", 3));
    CHECK_THROWS(P("(1 2)(2 3)", 3));
    CHECK_THROWS(P("1 2", 3));
}

TEST_CASE("datum validation")
{
    CHECK_THROWS_AS(genus0(2, {{"a", "(1 2)"}}), InvariantError);   // product (12) != id
    CHECK_THROWS_AS(genus0(2, {{"a", "()"}}), InvariantError);      // identity branch cycle
    CHECK_THROWS_AS(genus0(2, {{"a", "(1 2)"}, {"a", "(1 2)"}}), InvariantError);
    CHECK_THROWS_AS(MonodromyDatum::create(0, 2, 2, {}, {{"a", P("(1 2)", 2)}, {"b", P("(1 2)", 2)}}),
                    InvariantError);   // wild
    CHECK_THROWS_AS(MonodromyDatum::create(1, 2, 0, {}, {}), InvariantError);   // missing handle
    CHECK_NOTHROW(s3());
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(MonodromyDatum::create(0, 1, 0, {}, {})));
    CHECK_FALSE(is_connected(genus0(4, {{"a", "(1 2)"}, {"b", "(1 2)"}, {"c", "(3 4)"}, {"d", "(3 4)"}})));
    CHECK(is_connected(MonodromyDatum::create(1, 2, 0, {{P("(1 2)", 2), Permutation::identity(2)}}, {})));
}

TEST_CASE("ramification profiles")
{
    for (int m : {2, 5, 9}) {
        const auto f = ramification_profile_of(kummer_datum(m));
        CHECK(f.fiber("0") == Partition{m});
        CHECK(f.fiber("inf") == Partition{m});
        CHECK(f.source().genus == 0);
        CHECK(f.galois());
    }
    const auto k = ramification_profile_of(klein());
    CHECK(k.fibers().size() == 3);
    for (const auto& [x, part] : k.fibers())
        CHECK(part == Partition{2, 2});
    CHECK(k.source().genus == 0);

    const auto t = ramification_profile_of(genus0(3, {{"a", "(1 2 3)"}, {"b", "(1 2 3)"}, {"c", "(1 2 3)"}}));
    CHECK(t.source().genus == 1);
    CHECK(t.fiber("b") == Partition{3});

    CHECK_THROWS_AS(ramification_profile_of(genus0(4, {{"a", "(1 2)"}, {"b", "(1 2)"}})),
                    InvariantError);
}

TEST_CASE("group orders and Galois")
{
    CHECK(group_order(kummer_datum(2)) == 2);
    CHECK(group_order(klein()) == 4);
    CHECK(group_order(s3()) == 6);
    CHECK(is_galois(kummer_datum(7)));
    CHECK_FALSE(is_galois(s3()));
    CHECK(is_galois(klein()));
    CHECK_THROWS_AS(enumerate_group(s3().generators(), 3, 5), CapExceeded);
}

TEST_CASE("normal closure and genuine ramification")
{
    const auto etale = MonodromyDatum::create(1, 3, 0, {{P("(1 2 3)", 3), Permutation::identity(3)}}, {});
    CHECK(normal_closure_orbits(etale).size() == 3);
    CHECK_FALSE(is_genuinely_ramified(etale));

    CHECK(normal_closure_orbits(kummer_datum(2)) == std::vector<std::vector<int>>{{0, 1}});
    for (int m = 2; m <= 8; ++m)
        CHECK(is_genuinely_ramified(kummer_datum(m)));

    const auto B = blocks_example();
    CHECK(normal_closure_orbits(B) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK_FALSE(is_genuinely_ramified(B));
    CHECK(is_genuinely_ramified(klein()));
    CHECK(is_genuinely_ramified(s3()));
}

TEST_CASE("maximal etale subcover")
{
    CHECK(max_etale_subcover(kummer_datum(4)).degree == 1);

    const auto etale = MonodromyDatum::create(1, 3, 0, {{P("(1 2 3)", 3), Permutation::identity(3)}}, {});
    const auto e = max_etale_subcover(etale);
    CHECK(e.degree == 3);
    CHECK(e.block_datum.handles() == etale.handles());
    CHECK(e.block_datum.branch_cycles().empty());

    const auto b = max_etale_subcover(blocks_example());
    CHECK(b.degree == 2);
    CHECK(b.residual_degree == 2);
    CHECK(b.block_datum.handles().front().first.to_cycles() == "(1 2)");
    CHECK(b.block_datum.handles().front().second.is_identity());
}

TEST_CASE("subgroup oracle")
{
    CHECK(oracle_is_genuinely_ramified(kummer_datum(2)));
    CHECK_FALSE(oracle_is_genuinely_ramified(blocks_example()));
    CHECK(oracle_is_genuinely_ramified(klein()));
    CHECK(oracle_is_genuinely_ramified(s3()));
    CHECK_THROWS_AS(oracle_is_genuinely_ramified(kummer_datum(9)), CapExceeded);
}
