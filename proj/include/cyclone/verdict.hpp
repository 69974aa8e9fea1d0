#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclone/automaton.hpp"

namespace cyclone {

// Counterexample: stem[0] is the initial state, stem.back() == cycle.front(),
// cycle.back() -> cycle.front() closes the loop and cycle[accept_index] is
// accepting.
struct Lasso {
    std::vector<StateId> stem;
    std::vector<StateId> cycle;
    std::size_t accept_index = 0;
};

// Builds a lasso from a stem ending at the cycle entry and the cycle states;
// accept_index points at the first accepting cycle state.
Lasso make_lasso(const BuchiAutomaton& aut, std::vector<StateId> stem, std::vector<StateId> cycle);

struct WorkStats {
    std::uint64_t blue_expansions = 0;
    std::uint64_t red_expansions = 0;
    std::uint64_t repair_expansions = 0;
    std::uint64_t max_stack_depth = 0;
    std::uint64_t waits = 0;
    std::uint64_t helper_joins = 0;
    double wall_time = 0.0;

    std::uint64_t total_expansions() const {
        return blue_expansions + red_expansions + repair_expansions;
    }
    void note_depth(std::size_t depth) {
        if (depth > max_stack_depth) max_stack_depth = depth;
    }
};

// Per-run metrics outside the per-worker counters.
struct RunMetrics {
    std::uint64_t dangerous_count = 0;
    std::uint64_t repair_states = 0;
    std::uint64_t owcty_rounds = 0;
    std::uint64_t map_hits = 0;
};

struct Verdict {
    std::optional<Lasso> lasso;
    std::vector<WorkStats> workers;
    RunMetrics metrics;
    // Worker whose witness was taken; -1 for NoCycle or non-worker detectors.
    int winner = -1;
    double wall_time = 0.0;

    bool cycle_found() const { return lasso.has_value(); }
    WorkStats total() const;
};

}  // namespace cyclone
