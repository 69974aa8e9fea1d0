#include <doctest.h>

#include <set>
#include "cyclone/generators.hpp"
#include "cyclone/oracle.hpp"

using namespace cyclone;

TEST_CASE("gen_lasso shape") {
    auto one = gen_lasso(0, 1, true);
    CHECK(one.num_states() == 1);
    CHECK(one.is_accepting(0));
    CHECK(one.has_edge(0, 0));

    auto on = gen_lasso(2, 3, true);
    CHECK(on.num_states() == 5);
    CHECK(scc_has_accepting_cycle(on).has_value());

    auto off = gen_lasso(2, 3, false);
    CHECK(off.num_states() == 5);
    CHECK(!scc_has_accepting_cycle(off).has_value());

    CHECK_THROWS_AS(gen_lasso(2, 0, true), GeneratorError);
}

TEST_CASE("gen_lasso grid agrees with the oracle") {
    for (std::size_t stem = 0; stem <= 5; ++stem)
        for (std::size_t cycle = 1; cycle <= 5; ++cycle)
            for (bool acc : {false, true}) {
                auto aut = gen_lasso(stem, cycle, acc);
                CAPTURE(stem);
                CAPTURE(cycle);
                CHECK(scc_has_accepting_cycle(aut).has_value() == acc);
                CHECK(aut.accepting().size() == 1);
            }
}

TEST_CASE("gen_random") {
    auto single = gen_random(1, 0, 0, 5);
    CHECK(single.num_states() == 1);
    CHECK(single.num_edges() == 0);
    CHECK(!scc_has_accepting_cycle(single).has_value());

    CHECK(gen_random(50, 2, 0.1, 7) == gen_random(50, 2, 0.1, 7));
    CHECK(!(gen_random(50, 2, 0.1, 7) == gen_random(50, 2, 0.1, 8)));

    int cycles = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        cycles += scc_has_accepting_cycle(gen_random(100, 2, 0.2, seed)).has_value();
    CHECK(cycles > 0);
    CHECK(cycles < 100);

    CHECK_THROWS_AS(gen_random(0, 2, 0.1, 1), GeneratorError);
    CHECK_THROWS_AS(gen_random(5, 2, 1.5, 1), GeneratorError);
}

TEST_CASE("gen_needle") {
    auto tiny = gen_needle(1, 1, 0);
    CHECK(scc_has_accepting_cycle(tiny).has_value());

    auto needle = gen_needle(16, 1000, 3);
    CHECK(needle.num_states() == 1 + 16 * 1000 + 1);
    CHECK(scc_has_accepting_cycle(needle).has_value());
    CHECK(!scc_has_accepting_cycle(gen_needle(16, 1000, 3, false)).has_value());

    std::set<std::size_t> chains;
    for (std::uint64_t seed = 0; seed < 40; ++seed) chains.insert(needle_chain(16, seed));
    CHECK(chains.size() > 4);
}

TEST_CASE("generator specs") {
    CHECK(is_generator_spec("lasso:2:3:acc"));
    CHECK(!is_generator_spec("some/file.ba"));
    CHECK(generate_from_spec("lasso:2:3:noacc") == gen_lasso(2, 3, false));
    CHECK(generate_from_spec("random:200:2:0.2:9") == gen_random(200, 2, 0.2, 9));
    CHECK(generate_from_spec("needle:4:10:3") == gen_needle(4, 10, 3));
    CHECK_THROWS_AS(generate_from_spec("lasso:2:x:acc"), GeneratorError);
    CHECK_THROWS_AS(generate_from_spec("random:1:2"), GeneratorError);
}
