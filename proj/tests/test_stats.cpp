#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "cyclone/stats.hpp"

using namespace cyclone::stats;

TEST_CASE("cdf") {
    EmpiricalDistribution d({4, 2});
    CHECK(cdf(d, 3) == 0.5);
    CHECK(cdf(d, 1) == 0.0);
    CHECK(cdf(d, 4) == 1.0);
    CHECK(cdf(d, 2) == 0.5);
}

TEST_CASE("swarm_cdf") {
    EmpiricalDistribution d({2, 4});
    CHECK(std::abs(swarm_cdf(d, SwarmSize(16), 3) - (1.0 - std::pow(2.0, -16))) < 1e-12);
    for (double t : {0.0, 2.0, 3.0, 5.0}) CHECK(swarm_cdf(d, SwarmSize(1), t) == cdf(d, t));
    CHECK(swarm_cdf(d, SwarmSize(7), 1) == 0.0);
    CHECK(swarm_cdf(d, SwarmSize(7), 9) == 1.0);
}

TEST_CASE("expected_min and speedup") {
    EmpiricalDistribution d({2, 4});
    CHECK(expected_min(d, SwarmSize(1)).mean == 3.0);
    CHECK(expected_min(d, SwarmSize(2)).mean == 2.5);
    CHECK(speedup(d, SwarmSize(2)) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(speedup(d, SwarmSize(1)) == 1.0);

    EmpiricalDistribution single({5});
    for (unsigned n : {1u, 2u, 16u}) CHECK(expected_min(single, SwarmSize(n)).mean == 5.0);

    EmpiricalDistribution flat({3, 3, 3, 3});
    for (unsigned n : {1u, 4u, 64u}) CHECK(speedup(flat, SwarmSize(n)) == doctest::Approx(1.0));

    // With N = 2 the minimum is 2 with probability 3/4.
    CHECK(expected_min(d, SwarmSize(2)).stddev == doctest::Approx(std::sqrt(0.75)));
}

TEST_CASE("min weights form a distribution") {
    for (std::size_t m : {1u, 2u, 10u, 500u})
        for (unsigned n : {1u, 2u, 16u, 100u}) {
            auto w = min_weights(m, SwarmSize(n));
            CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
            for (double x : w) CHECK(x >= 0.0);
            if (n == 1)
                for (double x : w) CHECK(x == doctest::Approx(1.0 / static_cast<double>(m)));
        }
}

TEST_CASE("Monte Carlo minimum") {
    std::mt19937_64 rng(4);
    std::exponential_distribution<double> exp(1.0);
    std::vector<double> samples(500);
    for (auto& x : samples) x = exp(rng);
    EmpiricalDistribution d(samples);

    const auto moments = expected_min(d, SwarmSize(16));
    std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
    const int trials = 100000;
    double sum = 0;
    for (int i = 0; i < trials; ++i) {
        double m = samples[pick(rng)];
        for (int k = 1; k < 16; ++k) m = std::min(m, samples[pick(rng)]);
        sum += m;
    }
    const double mc = sum / trials;
    CHECK(std::abs(mc - moments.mean) <= 3 * moments.stddev / std::sqrt(double(trials)));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(EmpiricalDistribution({}), EmptyDistribution);
    CHECK_THROWS_AS(EmpiricalDistribution({1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(SwarmSize(0), std::invalid_argument);
    CHECK_THROWS_AS(speedup(EmpiricalDistribution({0.0, 0.0}), SwarmSize(2)), ZeroTime);

    std::istringstream in("# times\n2.5\n\n 1.5 \n");
    auto d = EmpiricalDistribution::read(in);
    CHECK(d.size() == 2);
    CHECK(d.samples()[0] == 1.5);
    std::istringstream bad("1.0\nabc\n");
    CHECK_THROWS_AS(EmpiricalDistribution::read(bad), std::invalid_argument);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(EmpiricalDistribution::read(empty), EmptyDistribution);
}
