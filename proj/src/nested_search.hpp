#pragma once

#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"
#include "search_support.hpp"

namespace cyclone::detail {

struct NestedSearchConfig {
    SuccessorOrder order;
    bool allred = false;
    // Optional: stop request polled at every expansion.
    const TerminationFlag* stop = nullptr;
    // Optional: fresh-successor heuristic bitset (marked on blue discovery).
    AtomicBitset* fresh = nullptr;
    // Optional: coverage bitset marked on every expansion.
    AtomicBitset* coverage = nullptr;
    // Count expansions as repair work instead of blue/red.
    bool repair = false;
    unsigned pace_workers = 1;
};

// Sequential New NDFS with early cycle detection and optional allred, all
// colors local. Colors persist across run() calls, so successive roots behave
// like one search from a virtual root with those roots as successors.
class NestedSearch {
public:
    NestedSearch(const BuchiAutomaton& aut, NestedSearchConfig config);

    // Explores from `root` unless it was already visited by an earlier call.
    // On Cycle, lasso() holds a witness whose stem starts at `root`.
    SearchOutcome run(StateId root, WorkStats& stats);

    const Lasso& lasso() const { return lasso_; }
    LocalColor color(StateId s) const { return colors_[s]; }

private:
    void enter_blue(StateId s, WorkStats& stats);
    SearchOutcome red_search(StateId root, WorkStats& stats);
    void count(WorkStats& stats, bool blue) const;

    const BuchiAutomaton& aut_;
    NestedSearchConfig config_;
    SuccessorOrder blue_order_;
    SuccessorOrder red_order_;
    std::vector<LocalColor> colors_;
    DfsStack blue_;
    DfsStack red_;
    Pacer pacer_;
    Lasso lasso_;
};

}  // namespace cyclone::detail
