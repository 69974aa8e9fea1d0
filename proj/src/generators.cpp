#include "cyclone/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

namespace cyclone {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

BuchiAutomaton gen_lasso(std::size_t stem_len, std::size_t cycle_len, bool accepting_on_cycle) {
    if (cycle_len == 0) throw GeneratorError("gen_lasso: cycle_len must be at least 1 (ZeroCycle)");

    const bool tail = stem_len == 0 && !accepting_on_cycle;
    const std::size_t n = stem_len + cycle_len + (tail ? 1 : 0);
    std::vector<std::vector<StateId>> succ(n);
    for (std::size_t i = 0; i + 1 < stem_len + cycle_len; ++i)
        succ[i].push_back(static_cast<StateId>(i + 1));
    const auto entry = static_cast<StateId>(stem_len);
    succ[stem_len + cycle_len - 1].push_back(entry);

    StateId accepting = 0;
    if (accepting_on_cycle) {
        accepting = entry;
    } else if (tail) {
        accepting = static_cast<StateId>(n - 1);
        succ[entry].push_back(accepting);
    }
    return BuchiAutomaton(n, 0, {accepting}, succ);
}

BuchiAutomaton gen_random(std::size_t n, double avg_out_degree, double accept_prob,
                          std::uint64_t seed) {
    if (n == 0) throw GeneratorError("gen_random: n must be at least 1");
    if (!(avg_out_degree >= 0.0)) throw GeneratorError("gen_random: negative degree");
    if (!(accept_prob >= 0.0 && accept_prob <= 1.0))
        throw GeneratorError("gen_random: accept_prob must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    // Every ordered pair (s, t) is an edge with probability q; targets are
    // visited by geometric skips, so the cost is linear in the edge count.
    const double q = std::min(1.0, avg_out_degree / static_cast<double>(n));
    const double log_miss = std::log1p(-q);
    std::vector<std::vector<StateId>> succ(n);
    std::vector<StateId> accepting;
    for (std::size_t s = 0; s < n; ++s) {
        if (q >= 1.0) {
            for (std::size_t t = 0; t < n; ++t) succ[s].push_back(static_cast<StateId>(t));
        } else if (q > 0.0) {
            for (double t = -1.0;;) {
                t += 1.0 + std::floor(std::log1p(-unit(rng)) / log_miss);
                if (t >= static_cast<double>(n)) break;
                succ[s].push_back(static_cast<StateId>(t));
            }
        }
        if (unit(rng) < accept_prob) accepting.push_back(static_cast<StateId>(s));
    }
    return BuchiAutomaton(n, 0, std::move(accepting), succ);
}

std::size_t needle_chain(std::size_t width, std::uint64_t seed) {
    return static_cast<std::size_t>(mix64(seed ^ 0x6e6565646c65ULL) % width);
}

BuchiAutomaton gen_needle(std::size_t width, std::size_t depth, std::uint64_t seed,
                          bool with_cycle) {
    if (width == 0 || depth == 0) throw GeneratorError("gen_needle: width and depth must be >= 1");

    // State 0 is init, chain c occupies [1 + c*depth, 1 + (c+1)*depth), the
    // last state is the accepting partner of the needle's 2-cycle.
    const std::size_t n = 1 + width * depth + 1;
    const auto partner = static_cast<StateId>(n - 1);
    std::vector<std::vector<StateId>> succ(n);
    for (std::size_t c = 0; c < width; ++c) {
        const std::size_t first = 1 + c * depth;
        succ[0].push_back(static_cast<StateId>(first));
        for (std::size_t k = 0; k + 1 < depth; ++k)
            succ[first + k].push_back(static_cast<StateId>(first + k + 1));
    }
    const std::size_t last = 1 + needle_chain(width, seed) * depth + depth - 1;
    succ[last].push_back(partner);
    if (with_cycle) succ[partner].push_back(static_cast<StateId>(last));
    return BuchiAutomaton(n, 0, {partner}, succ);
}

bool is_generator_spec(const std::string& spec) {
    return spec.rfind("lasso:", 0) == 0 || spec.rfind("random:", 0) == 0 ||
           spec.rfind("needle:", 0) == 0;
}

BuchiAutomaton generate_from_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);

    auto bad = [&]() { return GeneratorError("malformed generator spec '" + spec + "'"); };
    auto count = [&](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != s.size() || s.empty() || s[0] == '-') throw bad();
        return static_cast<std::size_t>(v);
    };
    auto real = [&](const std::string& s) -> double {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != s.size()) throw bad();
        return v;
    };

    if (parts.empty()) throw bad();
    if (parts[0] == "lasso" && parts.size() == 4) {
        if (parts[3] != "acc" && parts[3] != "noacc") throw bad();
        return gen_lasso(count(parts[1]), count(parts[2]), parts[3] == "acc");
    }
    if (parts[0] == "random" && parts.size() == 5)
        return gen_random(count(parts[1]), real(parts[2]), real(parts[3]), count(parts[4]));
    if (parts[0] == "needle" && parts.size() == 4)
        return gen_needle(count(parts[1]), count(parts[2]), count(parts[3]));
    throw bad();
}

}  // namespace cyclone
