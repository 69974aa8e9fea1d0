#pragma once

#include "cyclone/automaton.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

// Sequential New NDFS from the initial state. Both the blue and the red
// search derive their successor order from `order` (its kind is ignored).
Verdict ndfs(const BuchiAutomaton& aut, const SuccessorOrder& order, bool allred = false);

}  // namespace cyclone
