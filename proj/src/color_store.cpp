#include "cyclone/color_store.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ostream>
#include <string>
#include <thread>

namespace cyclone {

ColorStore::ColorStore(const BuchiAutomaton& aut)
    : aut_(&aut),
      n_(aut.num_states()),
      flags_(std::make_unique<std::atomic<std::uint8_t>[]>(n_)),
      counters_(std::make_unique<std::atomic<std::int64_t>[]>(aut.accepting().size())) {}

std::size_t ColorStore::count_flag(Flag which) const {
    std::size_t total = 0;
    for (std::size_t s = 0; s < n_; ++s) total += get_flag(static_cast<StateId>(s), which) ? 1 : 0;
    return total;
}

std::atomic<std::int64_t>& ColorStore::slot(StateId s) const {
    const StateId idx = aut_->accepting_index(s);
    if (idx == kNoState)
        throw std::invalid_argument("state " + std::to_string(s) + " has no counter (not accepting)");
    return counters_[idx];
}

std::int64_t ColorStore::counter_adjust(StateId s, int delta) {
    auto& c = slot(s);
    if (delta >= 0) return c.fetch_add(delta, std::memory_order_acq_rel) + delta;

    std::int64_t cur = c.load(std::memory_order_acquire);
    do {
        if (cur + delta < 0)
            throw UnderflowFault("counter of state " + std::to_string(s) + " would go negative");
    } while (!c.compare_exchange_weak(cur, cur + delta, std::memory_order_acq_rel,
                                      std::memory_order_acquire));
    return cur + delta;
}

std::int64_t ColorStore::counter(StateId s) const {
    return slot(s).load(std::memory_order_acquire);
}

AwaitResult ColorStore::await_zero(StateId s, const TerminationFlag& term) const {
    const auto& c = slot(s);
    unsigned spins = 0;
    auto sleep = std::chrono::microseconds(1);
    for (;;) {
        if (c.load(std::memory_order_acquire) == 0) return AwaitResult::Zero;
        if (term.requested()) return AwaitResult::Terminated;
        if (spins < 64) {
            ++spins;
            std::this_thread::yield();
        } else {
            std::this_thread::sleep_for(sleep);
            sleep = std::min(sleep * 2, std::chrono::microseconds(1000));
        }
    }
}

void ColorStore::dump_csv(std::ostream& out) const {
    out << "state,red,blue,dangerous,count\n";
    for (std::size_t i = 0; i < n_; ++i) {
        const auto s = static_cast<StateId>(i);
        out << s << ',' << get_flag(s, Flag::Red) << ',' << get_flag(s, Flag::Blue) << ','
            << get_flag(s, Flag::Dangerous) << ','
            << (aut_->is_accepting(s) ? counter(s) : 0) << '\n';
    }
}

AtomicBitset::AtomicBitset(std::size_t n)
    : n_(n), words_(std::make_unique<std::atomic<std::uint64_t>[]>((n + 63) / 64)) {}

std::size_t AtomicBitset::count() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < (n_ + 63) / 64; ++w)
        total += static_cast<std::size_t>(std::popcount(words_[w].load(std::memory_order_acquire)));
    return total;
}

}  // namespace cyclone
