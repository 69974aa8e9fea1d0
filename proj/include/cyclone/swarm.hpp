#pragma once

#include <cstdint>

#include "cyclone/automaton.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

// N isolated sequential NDFS instances with per-worker successor orders. The
// first worker to find a cycle stops the others. With `heuristic`, workers
// share a visited bitset and prefer globally unvisited successors.
Verdict swarm_ndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
                   bool heuristic = false);

}  // namespace cyclone
