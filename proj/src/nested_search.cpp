#include "nested_search.hpp"

#include <cassert>

namespace cyclone::detail {

NestedSearch::NestedSearch(const BuchiAutomaton& aut, NestedSearchConfig config)
    : aut_(aut),
      config_(config),
      blue_order_(config.order.with_kind(SearchKind::Blue)),
      red_order_(config.order.with_kind(SearchKind::Red)),
      colors_(aut.num_states(), LocalColor::White),
      pacer_(config.pace_workers) {}

void NestedSearch::count(WorkStats& stats, bool blue) const {
    if (config_.repair)
        ++stats.repair_expansions;
    else if (blue)
        ++stats.blue_expansions;
    else
        ++stats.red_expansions;
    stats.note_depth(blue_.depth() + red_.depth());
}

void NestedSearch::enter_blue(StateId s, WorkStats& stats) {
    colors_[s] = LocalColor::Cyan;
    blue_.push(aut_, s, blue_order_);
    if (config_.fresh) config_.fresh->set(s);
    if (config_.coverage) config_.coverage->set(s);
    count(stats, true);
}

SearchOutcome NestedSearch::run(StateId root, WorkStats& stats) {
    if (colors_[root] != LocalColor::White) return SearchOutcome::NoCycle;
    const bool allred = config_.allred;

    enter_blue(root, stats);
    while (!blue_.empty()) {
        if (config_.stop && config_.stop->requested()) {
            blue_.clear();
            return SearchOutcome::Stopped;
        }
        pacer_.tick();

        auto& frame = blue_.top();
        const StateId s = frame.state;
        if (frame.pending != kNoState) {
            if (colors_[frame.pending] != LocalColor::Red) frame.allred = false;
            frame.pending = kNoState;
        }

        if (auto next = blue_.next(config_.fresh)) {
            const StateId t = *next;
            if (colors_[t] == LocalColor::Cyan && (aut_.is_accepting(s) || aut_.is_accepting(t))) {
                lasso_ = lasso_from_blue(aut_, blue_.states(), t);
                blue_.clear();
                return SearchOutcome::Cycle;
            }
            if (colors_[t] == LocalColor::White) {
                frame.pending = t;
                enter_blue(t, stats);
            } else if (colors_[t] != LocalColor::Red) {
                frame.allred = false;
            }
            continue;
        }

        if (allred && frame.allred) {
            colors_[s] = LocalColor::Red;
        } else if (aut_.is_accepting(s)) {
            auto outcome = red_search(s, stats);
            if (outcome != SearchOutcome::NoCycle) {
                blue_.clear();
                return outcome;
            }
        } else {
            colors_[s] = LocalColor::Blue;
        }
        blue_.pop();
    }
    return SearchOutcome::NoCycle;
}

SearchOutcome NestedSearch::red_search(StateId root, WorkStats& stats) {
    colors_[root] = LocalColor::Red;
    red_.push(aut_, root, red_order_);
    if (config_.coverage) config_.coverage->set(root);
    count(stats, false);

    while (!red_.empty()) {
        if (config_.stop && config_.stop->requested()) {
            red_.clear();
            return SearchOutcome::Stopped;
        }
        pacer_.tick();

        auto next = red_.next(config_.fresh);
        if (!next) {
            red_.pop();
            continue;
        }
        const StateId t = *next;
        if (colors_[t] == LocalColor::Cyan) {
            lasso_ = lasso_from_red(aut_, blue_.states(), red_.states(), t);
            red_.clear();
            return SearchOutcome::Cycle;
        }
        if (colors_[t] == LocalColor::Blue) {
            // Red searches start in blue post order, so every accepting state
            // reachable from the root is already red.
            assert(!aut_.is_accepting(t));
            colors_[t] = LocalColor::Red;
            red_.push(aut_, t, red_order_);
            if (config_.coverage) config_.coverage->set(t);
            count(stats, false);
        }
    }
    return SearchOutcome::NoCycle;
}

}  // namespace cyclone::detail
