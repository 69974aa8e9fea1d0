#include "cyclone/ndfs.hpp"

#include <chrono>

#include "nested_search.hpp"

namespace cyclone {

Verdict ndfs(const BuchiAutomaton& aut, const SuccessorOrder& order, bool allred) {
    const auto start = std::chrono::steady_clock::now();
    detail::NestedSearch search(aut, {.order = order, .allred = allred});

    Verdict verdict;
    verdict.workers.resize(1);
    if (search.run(aut.init(), verdict.workers[0]) == detail::SearchOutcome::Cycle) {
        verdict.lasso = search.lasso();
        verdict.winner = 0;
    }
    verdict.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    verdict.workers[0].wall_time = verdict.wall_time;
    return verdict;
}

}  // namespace cyclone
