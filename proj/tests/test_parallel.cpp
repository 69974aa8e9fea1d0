#include <doctest.h>

#include <algorithm>

#include "cyclone/endfs.hpp"
#include "cyclone/generators.hpp"
#include "cyclone/lndfs.hpp"
#include "cyclone/ndfs.hpp"
#include "cyclone/nmc.hpp"
#include "cyclone/oracle.hpp"
#include "cyclone/swarm.hpp"
#include "families.hpp"

using namespace cyclone;

namespace {

std::vector<BuchiAutomaton> batch(std::size_t count) {
    std::vector<BuchiAutomaton> out;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t n = 10 + (i * 53) % 240;
        if (i % 3 == 0)
            out.push_back(gen_random(n, 1 + i % 3, i % 2 ? 0.05 : 0.2, i));
        else
            out.push_back(testing::trivial_scc_accepting(n, 1 + i % 3, i, i % 3 == 1));
    }
    return out;
}

template <typename Detect>
void sweep_against_oracle(std::size_t instances, Detect detect) {
    for (const auto& aut : batch(instances)) {
        const bool expected = scc_has_accepting_cycle(aut).has_value();
        for (unsigned workers : {1u, 2u, 4u, 8u})
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                Verdict v = detect(aut, workers, seed);
                CAPTURE(aut.num_states());
                CAPTURE(workers);
                CAPTURE(seed);
                REQUIRE(v.cycle_found() == expected);
                if (v.lasso) REQUIRE(validate_lasso(aut, *v.lasso));
            }
    }
}

}  // namespace

TEST_CASE("swarm with one worker is ndfs") {
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto aut = testing::trivial_scc_accepting(80, 2, i, i % 2);
        auto seq = ndfs(aut, {0, i, SearchKind::Blue, false});
        auto one = swarm_ndfs(aut, 1, i, false);
        CHECK(one.cycle_found() == seq.cycle_found());
        CHECK(one.workers[0].blue_expansions == seq.workers[0].blue_expansions);
        CHECK(one.workers[0].red_expansions == seq.workers[0].red_expansions);
        if (seq.lasso) CHECK(one.lasso->cycle == seq.lasso->cycle);
    }
}

TEST_CASE("swarm on needles") {
    int short_wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto aut = gen_needle(16, 1000, seed);
        auto v = swarm_ndfs(aut, 16, seed);
        REQUIRE(v.cycle_found());
        CHECK(validate_lasso(aut, *v.lasso));
        std::uint64_t least = ~std::uint64_t{0};
        for (const auto& w : v.workers) least = std::min(least, w.blue_expansions);
        if (least < 4 * 1000) ++short_wins;
    }
    CHECK(short_wins >= 15);
}

TEST_CASE("swarm agrees with the oracle") {
    sweep_against_oracle(200, [](const BuchiAutomaton& aut, unsigned n, std::uint64_t seed) {
        return swarm_ndfs(aut, n, seed, seed % 2 == 1);
    });
}

TEST_CASE("lndfs with one worker matches ndfs with allred") {
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto aut = testing::trivial_scc_accepting(80, 2, i, i % 2);
        auto seq = ndfs(aut, SuccessorOrder::canonical(), true);
        auto one = lndfs(aut, 1, i);
        CHECK(one.cycle_found() == seq.cycle_found());
        CHECK(one.workers[0].blue_expansions == seq.workers[0].blue_expansions);
        CHECK(one.workers[0].red_expansions == seq.workers[0].red_expansions);
    }
}

TEST_CASE("lndfs colors everything red on an accepting-stem lasso") {
    auto aut = gen_lasso(3, 4, false);
    for (unsigned workers : {1u, 2u, 4u}) {
        ColorStore store(aut);
        auto v = lndfs(aut, workers, 5, false, store);
        CHECK(!v.cycle_found());
        for (StateId s = 0; s < aut.num_states(); ++s) CHECK(store.get_flag(s, Flag::Red));
    }
}

TEST_CASE("lndfs agrees with the oracle") {
    sweep_against_oracle(200, [](const BuchiAutomaton& aut, unsigned n, std::uint64_t seed) {
        return lndfs(aut, n, seed, seed % 2 == 1);
    });
}

TEST_CASE("endfs single worker never repairs") {
    for (const auto& aut : batch(150)) {
        auto v = endfs(aut, 1, 3);
        CHECK(v.metrics.dangerous_count == 0);
        CHECK(v.total().repair_expansions == 0);
        CHECK(v.cycle_found() == scc_has_accepting_cycle(aut).has_value());
    }
}

TEST_CASE("endfs self-loop at any width") {
    for (unsigned workers : {1u, 2u, 8u, 16u}) {
        auto v = endfs(gen_lasso(0, 1, true), workers, workers);
        REQUIRE(v.cycle_found());
        CHECK(v.lasso->cycle == std::vector<StateId>{0});
    }
}

TEST_CASE("endfs agrees with the oracle and stays within 4|S| per worker") {
    std::uint64_t repairs = 0;
    for (const auto& aut : batch(200)) {
        const bool expected = scc_has_accepting_cycle(aut).has_value();
        for (unsigned workers : {2u, 4u, 8u})
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                auto v = endfs(aut, workers, seed);
                REQUIRE(v.cycle_found() == expected);
                if (v.lasso) REQUIRE(validate_lasso(aut, *v.lasso));
                for (const auto& w : v.workers)
                    REQUIRE(w.total_expansions() <= 4 * aut.num_states());
                repairs += v.total().repair_expansions;
            }
    }
    MESSAGE("cumulative endfs repair expansions: " << repairs);
}

TEST_CASE("nmc single worker matches endfs") {
    for (const auto& aut : batch(100)) {
        auto e = endfs(aut, 1, 9);
        auto m = nmc_ndfs(aut, 1, 9);
        CHECK(m.metrics.dangerous_count == 0);
        CHECK(m.cycle_found() == e.cycle_found());
        CHECK(m.workers[0].blue_expansions == e.workers[0].blue_expansions);
        CHECK(m.workers[0].red_expansions == e.workers[0].red_expansions);
    }
}

TEST_CASE("nmc agrees with the oracle") {
    sweep_against_oracle(200, [](const BuchiAutomaton& aut, unsigned n, std::uint64_t seed) {
        return nmc_ndfs(aut, n, seed);
    });
}

TEST_CASE("nmc repair work on the fully red family") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto aut = testing::all_reachable_from_accepting(300, 2, i);
        auto v = nmc_ndfs(aut, 8, i);
        CHECK(!v.cycle_found());
        const double n = static_cast<double>(aut.num_states());
        const double repair = static_cast<double>(v.total().repair_expansions) / n;
        const double coverage = static_cast<double>(v.metrics.repair_states) / n;
        CAPTURE(i);
        CHECK(repair <= coverage + 1.0);
    }
}
