#include "cyclone/swarm.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>

#include "nested_search.hpp"

namespace cyclone {

Verdict swarm_ndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
                   bool heuristic) {
    if (n_workers == 0) throw std::invalid_argument("swarm_ndfs: need at least one worker");
    const auto start = std::chrono::steady_clock::now();

    detail::RunControl control;
    std::unique_ptr<AtomicBitset> fresh;
    if (heuristic) fresh = std::make_unique<AtomicBitset>(aut.num_states());

    Verdict verdict;
    verdict.workers.resize(n_workers);
    detail::run_workers(n_workers, control, [&](unsigned i) {
        const auto t0 = std::chrono::steady_clock::now();
        detail::NestedSearch search(aut, {.order = detail::worker_order(i, seed, false),
                                          .stop = &control.stop,
                                          .fresh = fresh.get(),
                                          .pace_workers = n_workers});
        auto& stats = verdict.workers[i];
        if (search.run(aut.init(), stats) == detail::SearchOutcome::Cycle)
            control.report(static_cast<int>(i), search.lasso());
        stats.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });

    verdict.lasso = control.take_lasso();
    verdict.winner = control.winner();
    verdict.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

}  // namespace cyclone
