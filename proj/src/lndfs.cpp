#include "cyclone/lndfs.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>

#include "lndfs_worker.hpp"

namespace cyclone {

Verdict lndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed, bool heuristic,
              ColorStore& store) {
    if (n_workers == 0) throw std::invalid_argument("lndfs: need at least one worker");
    const auto start = std::chrono::steady_clock::now();

    detail::RunControl control;
    std::unique_ptr<AtomicBitset> fresh;
    if (heuristic) fresh = std::make_unique<AtomicBitset>(aut.num_states());

    Verdict verdict;
    verdict.workers.resize(n_workers);
    detail::run_workers(n_workers, control, [&](unsigned i) {
        const auto t0 = std::chrono::steady_clock::now();
        detail::LndfsWorker worker(aut, store, control.stop,
                                   {.order = detail::worker_order(i, seed, true),
                                    .fresh = fresh.get(),
                                    .pace_workers = n_workers});
        auto& stats = verdict.workers[i];
        if (worker.run(aut.init(), stats) == detail::SearchOutcome::Cycle)
            control.report(static_cast<int>(i), worker.lasso());
        stats.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });

    verdict.lasso = control.take_lasso();
    verdict.winner = control.winner();
    verdict.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

Verdict lndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed, bool heuristic) {
    ColorStore store(aut);
    return lndfs(aut, n_workers, seed, heuristic, store);
}

}  // namespace cyclone
