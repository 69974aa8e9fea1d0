#pragma once

// Automaton families shared by the unit tests and the acceptance run.

#include <cstdint>
#include <random>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/generators.hpp"
#include "cyclone/oracle.hpp"

namespace cyclone::testing {

inline std::vector<std::vector<StateId>> edge_lists(const BuchiAutomaton& aut) {
    std::vector<std::vector<StateId>> succ(aut.num_states());
    for (StateId s = 0; s < aut.num_states(); ++s)
        succ[s].assign(aut.successors(s).begin(), aut.successors(s).end());
    return succ;
}

// Random graph whose accepting states sit only in trivial SCCs, so there is
// no accepting cycle, yet red searches run through large cyclic regions.
// With `plant`, a few states inside non-trivial SCCs are made accepting too.
inline BuchiAutomaton trivial_scc_accepting(std::size_t n, double degree, std::uint64_t seed,
                                            bool plant = false) {
    const auto base = gen_random(n, degree, 0.0, seed);
    std::mt19937_64 rng(seed);
    std::vector<StateId> acc;
    for (const auto& scc : reachable_sccs(base, base.init())) {
        const bool trivial = scc.size() == 1 && !base.has_edge(scc[0], scc[0]);
        for (StateId s : scc)
            if (trivial ? rng() % 2 == 0 : (plant && rng() % 40 == 0)) acc.push_back(s);
    }
    return BuchiAutomaton(n, base.init(), acc, edge_lists(base));
}

// No accepting cycle and every state reachable from an accepting one: a fresh
// accepting init (no incoming edges) in front of a random graph whose
// accepting states are all in trivial SCCs.
inline BuchiAutomaton all_reachable_from_accepting(std::size_t n, double degree,
                                                   std::uint64_t seed) {
    const auto inner = trivial_scc_accepting(n, degree, seed);
    std::vector<std::vector<StateId>> succ(n + 1);
    for (StateId s = 0; s < n; ++s)
        for (StateId t : inner.successors(s)) succ[s + 1].push_back(t + 1);
    std::vector<char> seen(n, 0);
    for (StateId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        succ[0].push_back(s + 1);
        for (const auto& scc : reachable_sccs(inner, s))
            for (StateId t : scc) seen[t] = 1;
    }
    std::vector<StateId> acc{0};
    for (StateId s : inner.accepting()) acc.push_back(s + 1);
    return BuchiAutomaton(n + 1, 0, acc, succ);
}

}  // namespace cyclone::testing
