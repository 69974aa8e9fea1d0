#pragma once

// Internal helpers shared by the DFS-based detectors.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <latch>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone::detail {

enum class SearchOutcome { NoCycle, Cycle, Stopped };

// Explicit DFS stack. Each frame owns a slice of a shared successor arena
// holding its permuted successor list.
class DfsStack {
public:
    struct Frame {
        StateId state;
        std::size_t begin;
        std::size_t end;
        std::size_t next;
        // Child currently being explored by a nested call; kNoState if none.
        StateId pending = kNoState;
        bool allred = true;
    };

    void push(const BuchiAutomaton& aut, StateId s, const SuccessorOrder& order) {
        const std::size_t begin = succ_.size();
        append_permuted_successors(aut, s, order, succ_);
        frames_.push_back({s, begin, succ_.size(), begin});
    }

    void pop() {
        succ_.resize(frames_.back().begin);
        frames_.pop_back();
    }

    Frame& top() { return frames_.back(); }
    bool empty() const { return frames_.empty(); }
    std::size_t depth() const { return frames_.size(); }

    // Next successor of the top frame. With `fresh`, the first remaining
    // successor not yet globally visited is moved to the front, so the rest
    // keep their permuted order.
    std::optional<StateId> next(const AtomicBitset* fresh) {
        Frame& f = frames_.back();
        if (f.next == f.end) return std::nullopt;
        if (fresh != nullptr) {
            for (std::size_t j = f.next; j < f.end; ++j) {
                if (!fresh->test(succ_[j])) {
                    std::rotate(succ_.begin() + static_cast<std::ptrdiff_t>(f.next),
                                succ_.begin() + static_cast<std::ptrdiff_t>(j),
                                succ_.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    break;
                }
            }
        }
        return succ_[f.next++];
    }

    // States from bottom to top.
    std::vector<StateId> states() const {
        std::vector<StateId> out;
        out.reserve(frames_.size());
        for (const auto& f : frames_) out.push_back(f.state);
        return out;
    }

    void clear() {
        frames_.clear();
        succ_.clear();
    }

private:
    std::vector<Frame> frames_;
    std::vector<StateId> succ_;
};

// Lasso for a back edge top -> t while t is on `blue` (early detection).
inline Lasso lasso_from_blue(const BuchiAutomaton& aut, const std::vector<StateId>& blue, StateId t) {
    auto at = std::find(blue.begin(), blue.end(), t);
    std::vector<StateId> stem(blue.begin(), at + 1);
    std::vector<StateId> cycle(at, blue.end());
    return make_lasso(aut, std::move(stem), std::move(cycle));
}

// Lasso for a red search (rooted at blue.back()) hitting cyan t from red.back().
inline Lasso lasso_from_red(const BuchiAutomaton& aut, const std::vector<StateId>& blue,
                            const std::vector<StateId>& red, StateId t) {
    auto at = std::find(blue.begin(), blue.end(), t);
    std::vector<StateId> stem(blue.begin(), at + 1);
    std::vector<StateId> cycle(at, blue.end());
    cycle.insert(cycle.end(), red.begin() + 1, red.end());
    return make_lasso(aut, std::move(stem), std::move(cycle));
}

// Prepends a path init..root to a lasso whose stem starts at root.
inline Lasso prefix_lasso(std::vector<StateId> prefix, Lasso inner) {
    prefix.insert(prefix.end(), inner.stem.begin() + 1, inner.stem.end());
    inner.stem = std::move(prefix);
    return inner;
}

// Shared run state: stop flag, first-claim reporter slot, first worker error.
class RunControl {
public:
    TerminationFlag stop;

    // Claims the reporter slot; only the first claim succeeds.
    bool report(int worker, Lasso lasso) {
        int expected = -1;
        if (!winner_.compare_exchange_strong(expected, worker, std::memory_order_acq_rel)) {
            stop.request();
            return false;
        }
        {
            std::lock_guard lock(mutex_);
            lasso_ = std::move(lasso);
        }
        stop.request();
        return true;
    }

    void fail(std::exception_ptr error) {
        {
            std::lock_guard lock(mutex_);
            if (!error_) error_ = error;
        }
        stop.request();
    }

    void rethrow_if_failed() {
        std::lock_guard lock(mutex_);
        if (error_) std::rethrow_exception(error_);
    }

    int winner() const { return winner_.load(std::memory_order_acquire); }

    std::optional<Lasso> take_lasso() {
        std::lock_guard lock(mutex_);
        return std::move(lasso_);
    }

private:
    std::atomic<int> winner_{-1};
    std::mutex mutex_;
    std::optional<Lasso> lasso_;
    std::exception_ptr error_;
};

// Gives up the CPU every few expansions when workers outnumber hardware
// threads, so oversubscribed workers still advance concurrently.
class Pacer {
public:
    explicit Pacer(unsigned workers)
        : active_(workers > std::max(1u, std::thread::hardware_concurrency())) {}

    void tick() {
        if (active_ && (++ticks_ & 63u) == 0) std::this_thread::yield();
    }

private:
    bool active_;
    unsigned ticks_ = 0;
};

// Runs fn(i) on n threads released together; the first exception stops the
// run and is rethrown after all workers joined.
template <class Fn>
void run_workers(unsigned n, RunControl& control, Fn&& fn) {
    std::latch start(static_cast<std::ptrdiff_t>(n));
    {
        std::vector<std::jthread> threads;
        threads.reserve(n);
        for (unsigned i = 0; i < n; ++i) {
            threads.emplace_back([&, i] {
                start.arrive_and_wait();
                try {
                    fn(i);
                } catch (...) {
                    control.fail(std::current_exception());
                }
            });
        }
    }
    control.rethrow_if_failed();
}

// Order keys for worker i. Worker 0 of LNDFS-style swarms takes the canonical
// order when `identity_for_zero` is set.
inline SuccessorOrder worker_order(unsigned worker, std::uint64_t seed, bool identity_for_zero) {
    SuccessorOrder order{worker, seed, SearchKind::Blue, false};
    if (identity_for_zero && worker == 0) order.identity = true;
    return order;
}

}  // namespace cyclone::detail
