#pragma once

#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"
#include "search_support.hpp"

namespace cyclone::detail {

struct LndfsConfig {
    SuccessorOrder order;
    // Which shared flag plays the role of red.
    Flag red = Flag::Red;
    AtomicBitset* fresh = nullptr;
    AtomicBitset* coverage = nullptr;
    bool repair = false;
    unsigned pace_workers = 1;
};

// One LNDFS worker: cyan/blue/pink are local, red is shared through the
// store, accepting states are promoted red only once their counter drains.
// Local colors persist across run() calls.
class LndfsWorker {
public:
    LndfsWorker(const BuchiAutomaton& aut, ColorStore& store, const TerminationFlag& stop,
                LndfsConfig config);

    // Blue search from `root` (skipped when root is already red or was
    // visited by an earlier call). On Cycle, lasso() has a stem from `root`.
    SearchOutcome run(StateId root, WorkStats& stats);

    const Lasso& lasso() const { return lasso_; }

private:
    bool red(StateId s) const { return store_.get_flag(s, config_.red); }
    void enter_blue(StateId s, WorkStats& stats);
    SearchOutcome red_search(StateId root, WorkStats& stats);
    void count(WorkStats& stats, bool blue) const;

    const BuchiAutomaton& aut_;
    ColorStore& store_;
    const TerminationFlag& stop_;
    LndfsConfig config_;
    SuccessorOrder blue_order_;
    SuccessorOrder red_order_;
    std::vector<LocalColor> colors_;
    DfsStack blue_;
    DfsStack red_;
    Pacer pacer_;
    Lasso lasso_;
};

}  // namespace cyclone::detail
