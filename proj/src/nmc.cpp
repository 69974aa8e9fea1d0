#include "cyclone/nmc.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "endfs_worker.hpp"
#include "lndfs_worker.hpp"

namespace cyclone {

namespace {

constexpr std::uint64_t kRepairSalt = 0x6c6e6466730002ULL;

struct RepairTask {
    StateId root;
    std::vector<StateId> stem;
};

// Repair tasks keyed by dangerous root. A task is open until its root turns
// repair-red.
class RepairBoard {
public:
    // Returns true when a task for `root` already existed (the caller joins it).
    bool publish(StateId root, std::span<const StateId> stem) {
        std::lock_guard lock(mutex_);
        if (!roots_.insert(root).second) return true;
        tasks_.push_back({root, {stem.begin(), stem.end()}});
        return false;
    }

    std::optional<RepairTask> find_open(const ColorStore& store) {
        std::lock_guard lock(mutex_);
        for (const auto& task : tasks_)
            if (!store.get_flag(task.root, Flag::RepairRed)) return task;
        return std::nullopt;
    }

private:
    std::mutex mutex_;
    std::unordered_set<StateId> roots_;
    std::vector<RepairTask> tasks_;
};

}  // namespace

Verdict nmc_ndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
                 ColorStore& store) {
    if (n_workers == 0) throw std::invalid_argument("nmc_ndfs: need at least one worker");
    const auto start = std::chrono::steady_clock::now();

    detail::RunControl control;
    AtomicBitset repaired(aut.num_states());
    RepairBoard board;
    std::atomic<unsigned> in_endfs{n_workers};

    Verdict verdict;
    verdict.workers.resize(n_workers);
    detail::run_workers(n_workers, control, [&](unsigned i) {
        const auto t0 = std::chrono::steady_clock::now();
        auto& stats = verdict.workers[i];

        // Repairs are LNDFS searches that share a red of their own, so the
        // optimistic red of the outer search never prunes them.
        detail::LndfsWorker repair(aut, store, control.stop,
                                   {.order = {i, mix64(seed ^ kRepairSalt), SearchKind::Blue, false},
                                    .red = Flag::RepairRed,
                                    .coverage = &repaired,
                                    .repair = true,
                                    .pace_workers = n_workers});
        auto repair_stage = [&](StateId root, std::span<const StateId> stem, WorkStats& st,
                                Lasso& lasso) {
            if (board.publish(root, stem)) ++st.helper_joins;
            auto outcome = repair.run(root, st);
            if (outcome == detail::SearchOutcome::Cycle)
                lasso = detail::prefix_lasso({stem.begin(), stem.end()}, repair.lasso());
            return outcome;
        };

        detail::EndfsWorker worker(aut, store, control.stop, detail::worker_order(i, seed, false),
                                   n_workers, repair_stage);
        auto outcome = worker.run(stats);
        in_endfs.fetch_sub(1, std::memory_order_acq_rel);
        if (outcome == detail::SearchOutcome::Cycle) control.report(static_cast<int>(i), worker.lasso());

        // Help with repairs until every worker left its ENDFS pass and no
        // repair is open.
        auto backoff = std::chrono::microseconds(1);
        while (outcome == detail::SearchOutcome::NoCycle && !control.stop.requested()) {
            if (auto task = board.find_open(store)) {
                ++stats.helper_joins;
                outcome = repair.run(task->root, stats);
                if (outcome == detail::SearchOutcome::Cycle)
                    control.report(static_cast<int>(i),
                                   detail::prefix_lasso(std::move(task->stem), repair.lasso()));
                backoff = std::chrono::microseconds(1);
                continue;
            }
            if (in_endfs.load(std::memory_order_acquire) == 0 && !board.find_open(store)) break;
            std::this_thread::sleep_for(backoff);
            backoff = std::min(backoff * 2, std::chrono::microseconds(500));
        }
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

Verdict nmc_ndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed) {
    ColorStore store(aut);
    return nmc_ndfs(aut, n_workers, seed, store);
}

}  // namespace cyclone
