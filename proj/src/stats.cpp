#include "cyclone/stats.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <string>

namespace cyclone::stats {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
    if (samples_.empty()) throw EmptyDistribution();
    for (double x : samples_)
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument("samples must be finite and non-negative");
    std::sort(samples_.begin(), samples_.end());
}

EmpiricalDistribution EmpiricalDistribution::read(std::istream& in) {
    std::vector<double> samples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t pos = 0;
        double value = 0;
        try {
            value = std::stod(line.substr(first), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": not a number");
        }
        if (line.find_first_not_of(" \t\r", first + pos) != std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing text");
        samples.push_back(value);
    }
    return EmpiricalDistribution(std::move(samples));
}

double EmpiricalDistribution::mean() const {
    return std::accumulate(samples_.begin(), samples_.end(), 0.0) /
           static_cast<double>(samples_.size());
}

SwarmSize::SwarmSize(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("swarm size must be at least 1");
}

double cdf(const EmpiricalDistribution& dist, double t) {
    auto s = dist.samples();
    auto upto = std::upper_bound(s.begin(), s.end(), t);
    return static_cast<double>(upto - s.begin()) / static_cast<double>(s.size());
}

double swarm_cdf(const EmpiricalDistribution& dist, SwarmSize n, double t) {
    return 1.0 - std::pow(1.0 - cdf(dist, t), static_cast<double>(n.value()));
}

std::vector<double> min_weights(std::size_t m, SwarmSize n) {
    // P(min = t_(j)) = ((m-j+1)/m)^N - ((m-j)/m)^N for 1-based j.
    std::vector<double> w(m);
    const double md = static_cast<double>(m);
    const double N = static_cast<double>(n.value());
    for (std::size_t j = 0; j < m; ++j) {
        const double above = std::pow(static_cast<double>(m - j) / md, N);
        const double strictly_above = std::pow(static_cast<double>(m - j - 1) / md, N);
        w[j] = above - strictly_above;
    }
    return w;
}

MinimumMoments expected_min(const EmpiricalDistribution& dist, SwarmSize n) {
    auto s = dist.samples();
    const auto w = min_weights(s.size(), n);
    double mean = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) mean += w[j] * s[j];
    double var = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) var += w[j] * (s[j] - mean) * (s[j] - mean);
    return {mean, std::sqrt(std::max(var, 0.0))};
}

double speedup(const EmpiricalDistribution& dist, SwarmSize n) {
    const double base = expected_min(dist, SwarmSize(1)).mean;
    const double swarm = expected_min(dist, n).mean;
    if (swarm <= 0.0) throw ZeroTime();
    return base / swarm;
}

}  // namespace cyclone::stats
