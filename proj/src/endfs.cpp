#include "cyclone/endfs.hpp"

#include <chrono>
#include <stdexcept>

#include "endfs_worker.hpp"
#include "nested_search.hpp"

namespace cyclone {

namespace {
constexpr std::uint64_t kRepairSalt = 0x7265706169720001ULL;
}

Verdict endfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
              ColorStore& store) {
    if (n_workers == 0) throw std::invalid_argument("endfs: need at least one worker");
    const auto start = std::chrono::steady_clock::now();

    detail::RunControl control;
    AtomicBitset repaired(aut.num_states());

    Verdict verdict;
    verdict.workers.resize(n_workers);
    detail::run_workers(n_workers, control, [&](unsigned i) {
        const auto t0 = std::chrono::steady_clock::now();

        // One repair search per worker; its local colors persist across the
        // worker's repairs so repeated repairs never redo verified states.
        detail::NestedSearch repair(
            aut, {.order = {i, mix64(seed ^ kRepairSalt), SearchKind::Blue, false},
                  .stop = &control.stop,
                  .coverage = &repaired,
                  .repair = true,
                  .pace_workers = n_workers});
        auto repair_stage = [&](StateId root, std::span<const StateId> stem, WorkStats& stats,
                                Lasso& lasso) {
            auto outcome = repair.run(root, stats);
            if (outcome == detail::SearchOutcome::Cycle)
                lasso = detail::prefix_lasso({stem.begin(), stem.end()}, repair.lasso());
            return outcome;
        };

        detail::EndfsWorker worker(aut, store, control.stop, detail::worker_order(i, seed, false),
                                   n_workers, repair_stage);
        auto& stats = verdict.workers[i];
        if (worker.run(stats) == detail::SearchOutcome::Cycle)
            control.report(static_cast<int>(i), worker.lasso());
        stats.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });

    verdict.lasso = control.take_lasso();
    verdict.winner = control.winner();
    verdict.metrics.dangerous_count = store.count_flag(Flag::Dangerous);
    verdict.metrics.repair_states = repaired.count();
    verdict.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

Verdict endfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed) {
    ColorStore store(aut);
    return endfs(aut, n_workers, seed, store);
}

}  // namespace cyclone
