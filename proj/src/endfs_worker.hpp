#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"
#include "search_support.hpp"

namespace cyclone::detail {

// Repair of a dangerous accepting root. Receives the blue stack (init..root);
// on Cycle it stores a full witness in `lasso`.
using RepairStage = std::function<SearchOutcome(StateId root, std::span<const StateId> stem,
                                                WorkStats& stats, Lasso& lasso)>;

// One ENDFS worker: blue, red and dangerous are shared, cyan and pink local.
// Red-search members are collected and promoted red only after the search.
class EndfsWorker {
public:
    EndfsWorker(const BuchiAutomaton& aut, ColorStore& store, const TerminationFlag& stop,
                SuccessorOrder order, unsigned pace_workers, RepairStage repair);

    SearchOutcome run(WorkStats& stats);

    const Lasso& lasso() const { return lasso_; }

private:
    SearchOutcome red_search(StateId root, WorkStats& stats);
    void push(DfsStack& stack, StateId s, bool blue, WorkStats& stats);

    static constexpr std::uint8_t kCyan = 1;
    static constexpr std::uint8_t kPink = 2;

    const BuchiAutomaton& aut_;
    ColorStore& store_;
    const TerminationFlag& stop_;
    SuccessorOrder blue_order_;
    SuccessorOrder red_order_;
    RepairStage repair_;
    std::vector<std::uint8_t> local_;
    std::vector<StateId> candidates_;
    DfsStack blue_;
    DfsStack red_;
    Pacer pacer_;
    Lasso lasso_;
};

}  // namespace cyclone::detail
