#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

struct MapResult {
    // Set when an accepting state received its own identifier.
    std::optional<Lasso> lasso;
    // Maximal accepting predecessor per state: accepting id + 1, 0 for none.
    std::vector<std::uint64_t> values;
    std::uint64_t expansions = 0;
};

// One forward pass of maximal-accepting-predecessor propagation to a fixpoint
// over the reachable states.
MapResult map_pass(const BuchiAutomaton& aut);

struct OwctyTrace {
    // Surviving set size after each outer elimination round.
    std::vector<std::size_t> sizes;
    bool map_hit = false;
};

// MAP pass, then reachability/elimination rounds to a fixpoint. A non-empty
// fixpoint witnesses an accepting cycle.
Verdict owcty(const BuchiAutomaton& aut, OwctyTrace* trace = nullptr);

}  // namespace cyclone
