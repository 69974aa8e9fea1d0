#pragma once

#include <optional>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

// Ground truth by strongly connected components of the part reachable from
// init. Returns a witness when some SCC has >= 2 states and an accepting
// state, or is a single accepting state with a self-loop.
std::optional<Lasso> scc_has_accepting_cycle(const BuchiAutomaton& aut);

// Total check of the lasso shape; malformed input yields false.
bool validate_lasso(const BuchiAutomaton& aut, const Lasso& lasso);

// Iterative Tarjan over states reachable from `root`. Components come out in
// reverse topological order.
std::vector<std::vector<StateId>> reachable_sccs(const BuchiAutomaton& aut, StateId root);

// Shortest path from `from` to `to` (both included) using only states for
// which `allowed` is true (or all when empty). For from == to it returns a
// shortest non-trivial cycle, first state repeated at the end omitted.
std::optional<std::vector<StateId>> shortest_path(const BuchiAutomaton& aut, StateId from,
                                                  StateId to,
                                                  const std::vector<char>& allowed = {});

}  // namespace cyclone
