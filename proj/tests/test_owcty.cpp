#include <doctest.h>

#include "cyclone/generators.hpp"
#include "cyclone/oracle.hpp"
#include "cyclone/owcty.hpp"
#include "families.hpp"

using namespace cyclone;

TEST_CASE("map pass") {
    auto loop = map_pass(gen_lasso(0, 1, true));
    REQUIRE(loop.lasso);
    CHECK(loop.lasso->cycle == std::vector<StateId>{0});

    auto acyclic = BuchiAutomaton(2, 0, {1}, {{1}, {}});
    auto r = map_pass(acyclic);
    CHECK(!r.lasso);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == 0);
    CHECK(r.values[1] == 0);

    auto fed = BuchiAutomaton(3, 0, {0, 1}, {{1}, {2}, {}});
    r = map_pass(fed);
    CHECK(!r.lasso);
    CHECK(r.values == std::vector<std::uint64_t>{0, 1, 2});

    auto lasso = gen_lasso(2, 3, true);
    r = map_pass(lasso);
    REQUIRE(r.lasso);
    CHECK(validate_lasso(lasso, *r.lasso));
}

TEST_CASE("map misses a cycle below a larger accepting predecessor") {
    // Accepting 3 feeds its id into the cycle 1 <-> 2 around accepting 1.
    auto aut = BuchiAutomaton(4, 0, {1, 3}, {{3}, {2}, {1}, {1}});
    auto r = map_pass(aut);
    CHECK(!r.lasso);
    CHECK(r.values[1] == 4);
    auto v = owcty(aut);
    REQUIRE(v.cycle_found());
    CHECK(validate_lasso(aut, *v.lasso));
    CHECK(v.metrics.owcty_rounds >= 1);
    CHECK(v.metrics.map_hits == 0);
}

TEST_CASE("owcty eliminates an accepting stem") {
    auto aut = gen_lasso(2, 3, false);
    OwctyTrace trace;
    auto v = owcty(aut, &trace);
    CHECK(!v.cycle_found());
    CHECK(!trace.map_hit);
    CHECK(v.metrics.owcty_rounds >= 1);
    REQUIRE(!trace.sizes.empty());
    CHECK(trace.sizes.back() == 0);
}

TEST_CASE("owcty early exit") {
    OwctyTrace trace;
    auto v = owcty(gen_lasso(0, 1, true), &trace);
    CHECK(v.cycle_found());
    CHECK(trace.map_hit);
    CHECK(v.metrics.map_hits == 1);
    CHECK(v.metrics.owcty_rounds == 0);
}

TEST_CASE("owcty agrees with the oracle") {
    for (std::uint64_t i = 0; i < 500; ++i) {
        const std::size_t n = 10 + (i * 41) % 300;
        auto aut = i % 2 ? gen_random(n, 1 + i % 3, 0.05 + 0.1 * (i % 3), i)
                         : testing::trivial_scc_accepting(n, 1 + i % 3, i, i % 4 == 0);
        const bool expected = scc_has_accepting_cycle(aut).has_value();
        auto map = map_pass(aut);
        if (map.lasso) {
            REQUIRE(expected);
            REQUIRE(validate_lasso(aut, *map.lasso));
        }
        auto v = owcty(aut);
        CAPTURE(i);
        REQUIRE(v.cycle_found() == expected);
        if (v.lasso) REQUIRE(validate_lasso(aut, *v.lasso));
        CHECK(v.metrics.owcty_rounds <= aut.num_states());
    }
}
