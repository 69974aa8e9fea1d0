#include "endfs_worker.hpp"

namespace cyclone::detail {

EndfsWorker::EndfsWorker(const BuchiAutomaton& aut, ColorStore& store,
                         const TerminationFlag& stop, SuccessorOrder order,
                         unsigned pace_workers, RepairStage repair)
    : aut_(aut),
      store_(store),
      stop_(stop),
      blue_order_(order.with_kind(SearchKind::Blue)),
      red_order_(order.with_kind(SearchKind::Red)),
      repair_(std::move(repair)),
      local_(aut.num_states(), 0),
      pacer_(pace_workers) {}

void EndfsWorker::push(DfsStack& stack, StateId s, bool blue, WorkStats& stats) {
    stack.push(aut_, s, blue ? blue_order_ : red_order_);
    if (blue)
        ++stats.blue_expansions;
    else
        ++stats.red_expansions;
    stats.note_depth(blue_.depth() + red_.depth());
}

SearchOutcome EndfsWorker::run(WorkStats& stats) {
    const StateId init = aut_.init();
    local_[init] |= kCyan;
    push(blue_, init, true, stats);

    while (!blue_.empty()) {
        if (stop_.requested()) {
            blue_.clear();
            return SearchOutcome::Stopped;
        }
        pacer_.tick();

        const StateId s = blue_.top().state;
        if (auto next = blue_.next(nullptr)) {
            const StateId t = *next;
            if ((local_[t] & kCyan) && (aut_.is_accepting(s) || aut_.is_accepting(t))) {
                lasso_ = lasso_from_blue(aut_, blue_.states(), t);
                blue_.clear();
                return SearchOutcome::Cycle;
            }
            if (!(local_[t] & kCyan) && !store_.get_flag(t, Flag::Blue)) {
                local_[t] |= kCyan;
                push(blue_, t, true, stats);
            }
            continue;
        }

        local_[s] &= static_cast<std::uint8_t>(~kCyan);
        store_.set_flag(s, Flag::Blue);
        if (aut_.is_accepting(s)) {
            candidates_.clear();
            auto outcome = red_search(s, stats);
            if (outcome != SearchOutcome::NoCycle) {
                blue_.clear();
                return outcome;
            }
            for (StateId r : candidates_)
                if (!store_.get_flag(r, Flag::Dangerous) || r == s) store_.set_flag(r, Flag::Red);
            if (store_.get_flag(s, Flag::Dangerous)) {
                const auto stem = blue_.states();
                auto outcome = repair_(s, stem, stats, lasso_);
                if (outcome != SearchOutcome::NoCycle) {
                    blue_.clear();
                    return outcome;
                }
            }
        }
        blue_.pop();
    }
    return SearchOutcome::NoCycle;
}

SearchOutcome EndfsWorker::red_search(StateId root, WorkStats& stats) {
    local_[root] |= kPink;
    candidates_.push_back(root);
    push(red_, root, false, stats);

    while (!red_.empty()) {
        if (stop_.requested()) {
            red_.clear();
            return SearchOutcome::Stopped;
        }
        pacer_.tick();

        auto next = red_.next(nullptr);
        if (!next) {
            red_.pop();
            continue;
        }
        const StateId t = *next;
        if (local_[t] & kCyan) {
            lasso_ = lasso_from_red(aut_, blue_.states(), red_.states(), t);
            red_.clear();
            return SearchOutcome::Cycle;
        }
        const bool t_red = store_.get_flag(t, Flag::Red);
        if (aut_.is_accepting(t) && !t_red) store_.set_flag(t, Flag::Dangerous);
        // The recursive call goes to the successor t.
        if (!t_red && !(local_[t] & kPink)) {
            local_[t] |= kPink;
            candidates_.push_back(t);
            push(red_, t, false, stats);
        }
    }
    return SearchOutcome::NoCycle;
}

}  // namespace cyclone::detail
