#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cyclone/automaton.hpp"

namespace cyclone {

// Global per-state flags. All three named by the algorithms plus a separate
// red used by the parallel repair searches of the combined detector.
enum class Flag : std::uint8_t {
    Red = 1u << 0,
    Blue = 1u << 1,
    Dangerous = 1u << 2,
    RepairRed = 1u << 3,
};

// Global stop request; monotone.
class TerminationFlag {
public:
    void request() { stop_.store(true, std::memory_order_release); }
    bool requested() const { return stop_.load(std::memory_order_acquire); }

private:
    std::atomic<bool> stop_{false};
};

class UnderflowFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class AwaitResult { Zero, Terminated };

// Shared colors of one run: monotone flags packed into one byte per state,
// and one counter per accepting state.
//
// Every flag write is a release RMW and every read an acquire load, so a
// worker observing a flag also observes everything its setter wrote before.
class ColorStore {
public:
    explicit ColorStore(const BuchiAutomaton& aut);

    std::size_t size() const { return n_; }

    // Sets the flag, returns whether it was already set.
    bool set_flag(StateId s, Flag which) {
        auto bit = static_cast<std::uint8_t>(which);
        return (flags_[s].fetch_or(bit, std::memory_order_acq_rel) & bit) != 0;
    }

    bool get_flag(StateId s, Flag which) const {
        return (flags_[s].load(std::memory_order_acquire) & static_cast<std::uint8_t>(which)) != 0;
    }

    std::size_t count_flag(Flag which) const;

    // Indivisible +1 / -1 on the counter of an accepting state. Throws
    // UnderflowFault when the counter would go negative.
    std::int64_t counter_adjust(StateId s, int delta);
    std::int64_t counter(StateId s) const;

    // Polls the counter of `s` with exponential backoff until it reads zero or
    // `term` is requested.
    AwaitResult await_zero(StateId s, const TerminationFlag& term) const;

    // CSV `state,red,blue,dangerous,count`.
    void dump_csv(std::ostream& out) const;

private:
    std::atomic<std::int64_t>& slot(StateId s) const;

    const BuchiAutomaton* aut_;
    std::size_t n_;
    std::unique_ptr<std::atomic<std::uint8_t>[]> flags_;
    std::unique_ptr<std::atomic<std::int64_t>[]> counters_;
};

// Fixed-size concurrent bitset with monotone set().
class AtomicBitset {
public:
    explicit AtomicBitset(std::size_t n);

    // Returns whether the bit was already set.
    bool set(std::size_t i) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (words_[i >> 6].load(std::memory_order_relaxed) & mask) return true;
        return (words_[i >> 6].fetch_or(mask, std::memory_order_acq_rel) & mask) != 0;
    }
    bool test(std::size_t i) const {
        return (words_[i >> 6].load(std::memory_order_acquire) >> (i & 63)) & 1u;
    }
    std::size_t count() const;
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::unique_ptr<std::atomic<std::uint64_t>[]> words_;
};

// Worker-local colors of the LNDFS-style searches. Red lives in the shared
// store for the parallel detectors; the sequential search keeps it local.
enum class LocalColor : std::uint8_t { White, Cyan, Blue, Pink, Red };

}  // namespace cyclone
