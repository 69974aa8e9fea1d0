#pragma once

#include <cstdint>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

// Swarm with a globally shared red color, allred and counter-synchronized
// red promotion of accepting states. Worker 0 uses the canonical order.
Verdict lndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
              bool heuristic = false);

// Same, running on a caller-owned store that can be inspected afterwards.
Verdict lndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed, bool heuristic,
              ColorStore& store);

}  // namespace cyclone
