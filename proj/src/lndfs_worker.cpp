#include "lndfs_worker.hpp"

namespace cyclone::detail {

LndfsWorker::LndfsWorker(const BuchiAutomaton& aut, ColorStore& store,
                         const TerminationFlag& stop, LndfsConfig config)
    : aut_(aut),
      store_(store),
      stop_(stop),
      config_(config),
      blue_order_(config.order.with_kind(SearchKind::Blue)),
      red_order_(config.order.with_kind(SearchKind::Red)),
      colors_(aut.num_states(), LocalColor::White),
      pacer_(config.pace_workers) {}

void LndfsWorker::count(WorkStats& stats, bool blue) const {
    if (config_.repair)
        ++stats.repair_expansions;
    else if (blue)
        ++stats.blue_expansions;
    else
        ++stats.red_expansions;
    stats.note_depth(blue_.depth() + red_.depth());
}

void LndfsWorker::enter_blue(StateId s, WorkStats& stats) {
    colors_[s] = LocalColor::Cyan;
    blue_.push(aut_, s, blue_order_);
    blue_.top().allred = true;
    if (config_.fresh) config_.fresh->set(s);
    if (config_.coverage) config_.coverage->set(s);
    count(stats, true);
}

SearchOutcome LndfsWorker::run(StateId root, WorkStats& stats) {
    if (colors_[root] != LocalColor::White || red(root)) return SearchOutcome::NoCycle;

    enter_blue(root, stats);
    while (!blue_.empty()) {
        if (stop_.requested()) {
            blue_.clear();
            return SearchOutcome::Stopped;
        }
        pacer_.tick();

        auto& frame = blue_.top();
        const StateId s = frame.state;
        if (frame.pending != kNoState) {
            if (!red(frame.pending)) frame.allred = false;
            frame.pending = kNoState;
        }

        if (auto next = blue_.next(config_.fresh)) {
            const StateId t = *next;
            if (colors_[t] == LocalColor::Cyan && (aut_.is_accepting(s) || aut_.is_accepting(t))) {
                lasso_ = lasso_from_blue(aut_, blue_.states(), t);
                blue_.clear();
                return SearchOutcome::Cycle;
            }
            if (colors_[t] == LocalColor::White && !red(t)) {
                frame.pending = t;
                enter_blue(t, stats);
            } else if (!red(t)) {
                frame.allred = false;
            }
            continue;
        }

        if (frame.allred) {
            store_.set_flag(s, config_.red);
        } else if (aut_.is_accepting(s)) {
            store_.counter_adjust(s, +1);
            auto outcome = red_search(s, stats);
            if (outcome != SearchOutcome::NoCycle) {
                blue_.clear();
                return outcome;
            }
        }
        colors_[s] = LocalColor::Blue;
        blue_.pop();
    }
    return SearchOutcome::NoCycle;
}

SearchOutcome LndfsWorker::red_search(StateId root, WorkStats& stats) {
    colors_[root] = LocalColor::Pink;
    red_.push(aut_, root, red_order_);
    if (config_.coverage) config_.coverage->set(root);
    count(stats, false);

    while (!red_.empty()) {
        if (stop_.requested()) {
            red_.clear();
            return SearchOutcome::Stopped;
        }
        pacer_.tick();

        if (auto next = red_.next(config_.fresh)) {
            const StateId t = *next;
            if (colors_[t] == LocalColor::Cyan) {
                lasso_ = lasso_from_red(aut_, blue_.states(), red_.states(), t);
                red_.clear();
                return SearchOutcome::Cycle;
            }
            if (colors_[t] != LocalColor::Pink && !red(t)) {
                colors_[t] = LocalColor::Pink;
                red_.push(aut_, t, red_order_);
                if (config_.coverage) config_.coverage->set(t);
                count(stats, false);
            }
            continue;
        }

        const StateId s = red_.top().state;
        if (aut_.is_accepting(s)) {
            if (store_.counter_adjust(s, -1) != 0) {
                ++stats.waits;
                if (store_.await_zero(s, stop_) == AwaitResult::Terminated) {
                    red_.clear();
                    return SearchOutcome::Stopped;
                }
            }
        }
        store_.set_flag(s, config_.red);
        red_.pop();
    }
    return SearchOutcome::NoCycle;
}

}  // namespace cyclone::detail
