#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace cyclone::stats {

class EmptyDistribution : public std::invalid_argument {
public:
    EmptyDistribution() : std::invalid_argument("empirical distribution has no samples") {}
};

class ZeroTime : public std::domain_error {
public:
    ZeroTime() : std::domain_error("expected completion time is zero") {}
};

// Completion times of single-worker runs, kept sorted.
class EmpiricalDistribution {
public:
    // Throws EmptyDistribution for no samples, std::invalid_argument for
    // negative or non-finite ones.
    explicit EmpiricalDistribution(std::vector<double> samples);

    static EmpiricalDistribution read(std::istream& in);

    std::span<const double> samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    double mean() const;

private:
    std::vector<double> samples_;
};

// Swarm size N >= 1.
class SwarmSize {
public:
    explicit SwarmSize(unsigned n);
    unsigned value() const { return n_; }

private:
    unsigned n_;
};

// Fraction of samples <= t.
double cdf(const EmpiricalDistribution& dist, double t);

// 1 - (1 - F(t))^N: probability that at least one of N independent workers
// finishes within t.
double swarm_cdf(const EmpiricalDistribution& dist, SwarmSize n, double t);

struct MinimumMoments {
    double mean;
    double stddev;
};

// Probability mass of each sorted sample being the minimum of N draws with
// replacement.
std::vector<double> min_weights(std::size_t m, SwarmSize n);

MinimumMoments expected_min(const EmpiricalDistribution& dist, SwarmSize n);

// expected_min(1) / expected_min(N). Throws ZeroTime when all samples are 0.
double speedup(const EmpiricalDistribution& dist, SwarmSize n);

}  // namespace cyclone::stats
