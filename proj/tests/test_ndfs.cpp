#include <doctest.h>

#include "cyclone/generators.hpp"
#include "cyclone/ndfs.hpp"
#include "cyclone/oracle.hpp"
#include "families.hpp"

using namespace cyclone;

TEST_CASE("self-loop") {
    for (bool allred : {false, true}) {
        auto v = ndfs(gen_lasso(0, 1, true), SuccessorOrder::canonical(), allred);
        REQUIRE(v.cycle_found());
        CHECK(v.lasso->stem == std::vector<StateId>{0});
        CHECK(v.lasso->cycle == std::vector<StateId>{0});
        CHECK(v.lasso->accept_index == 0);
    }
}

TEST_CASE("accepting stem state") {
    auto v = ndfs(gen_lasso(2, 3, false), SuccessorOrder::canonical());
    CHECK(!v.cycle_found());
    REQUIRE(v.workers.size() == 1);
    CHECK(v.workers[0].blue_expansions == 5);
    // One red search from the accepting init, root included.
    CHECK(v.workers[0].red_expansions == 5);
}

TEST_CASE("early detection") {
    // Accepting 3 has the cyan successor 1.
    auto aut = BuchiAutomaton(4, 0, {3}, {{1}, {2}, {3, 1}, {1}});
    auto v = ndfs(aut, SuccessorOrder::canonical());
    REQUIRE(v.cycle_found());
    CHECK(validate_lasso(aut, *v.lasso));
}

TEST_CASE("random batch agrees with the oracle within the linear bound") {
    for (std::uint64_t i = 0; i < 500; ++i) {
        const std::size_t n = 5 + (i * 37) % 196;
        auto aut = i % 2 ? gen_random(n, 1 + i % 3, 0.05 + 0.1 * (i % 4), i)
                         : testing::trivial_scc_accepting(n, 1 + i % 3, i, i % 4 == 0);
        const bool expected = scc_has_accepting_cycle(aut).has_value();
        for (bool allred : {false, true})
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                auto v = ndfs(aut, {0, seed, SearchKind::Blue, false}, allred);
                CAPTURE(i);
                CAPTURE(seed);
                REQUIRE(v.cycle_found() == expected);
                if (v.lasso) REQUIRE(validate_lasso(aut, *v.lasso));
                const auto& w = v.workers[0];
                REQUIRE(w.blue_expansions + w.red_expansions <= 2 * aut.num_states());
            }
    }
}

TEST_CASE("witness through the red search") {
    // 0 -> 1 -> 2 -> 1, accepting 1 reached by the red search from 1 via 2.
    auto aut = BuchiAutomaton(3, 0, {1}, {{1}, {2}, {1}});
    auto v = ndfs(aut, SuccessorOrder::canonical());
    REQUIRE(v.cycle_found());
    CHECK(validate_lasso(aut, *v.lasso));
    // 2 -> 1 closes on cyan 1 with 1 accepting, caught by the blue search.
    CHECK(v.workers[0].red_expansions == 0);

    auto late = BuchiAutomaton(4, 0, {2}, {{1}, {2}, {3}, {1}});
    v = ndfs(late, SuccessorOrder::canonical());
    REQUIRE(v.cycle_found());
    CHECK(validate_lasso(late, *v.lasso));
    CHECK(v.workers[0].red_expansions > 0);
}

TEST_CASE("allred prunes red work") {
    std::uint64_t plain = 0, pruned = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto aut = testing::all_reachable_from_accepting(200, 2, i);
        plain += ndfs(aut, SuccessorOrder::canonical(), false).workers[0].red_expansions;
        pruned += ndfs(aut, SuccessorOrder::canonical(), true).workers[0].red_expansions;
    }
    CHECK(pruned <= plain);
}
