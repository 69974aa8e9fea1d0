#include "cyclone/owcty.hpp"

#include <chrono>
#include <deque>

#include "cyclone/oracle.hpp"

namespace cyclone {

namespace {

Lasso lasso_through(const BuchiAutomaton& aut, StateId a, std::vector<StateId> cycle) {
    std::vector<StateId> stem{aut.init()};
    if (a != aut.init()) stem = *shortest_path(aut, aut.init(), a);
    return make_lasso(aut, std::move(stem), std::move(cycle));
}

}  // namespace

MapResult map_pass(const BuchiAutomaton& aut) {
    const std::size_t n = aut.num_states();
    MapResult result;
    result.values.assign(n, 0);
    std::vector<char> reached(n, 0);
    std::vector<char> queued(n, 0);
    std::deque<StateId> work;

    reached[aut.init()] = queued[aut.init()] = 1;
    work.push_back(aut.init());
    while (!work.empty()) {
        const StateId u = work.front();
        work.pop_front();
        queued[u] = 0;
        ++result.expansions;

        std::uint64_t out = result.values[u];
        if (aut.is_accepting(u)) out = std::max<std::uint64_t>(out, std::uint64_t{u} + 1);
        for (StateId v : aut.successors(u)) {
            if (aut.is_accepting(v) && out == std::uint64_t{v} + 1) {
                result.lasso = lasso_through(aut, v, *shortest_path(aut, v, v));
                return result;
            }
            const bool grew = out > result.values[v];
            if (grew) result.values[v] = out;
            if ((grew || !reached[v]) && !queued[v]) {
                queued[v] = 1;
                work.push_back(v);
            }
            reached[v] = 1;
        }
    }
    return result;
}

Verdict owcty(const BuchiAutomaton& aut, OwctyTrace* trace) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = aut.num_states();
    Verdict verdict;
    verdict.workers.resize(1);
    auto& stats = verdict.workers[0];
    auto finish = [&]() {
        verdict.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        stats.wall_time = verdict.wall_time;
        return verdict;
    };

    MapResult map = map_pass(aut);
    stats.blue_expansions += map.expansions;
    if (map.lasso) {
        verdict.lasso = std::move(map.lasso);
        verdict.metrics.map_hits = 1;
        if (trace) trace->map_hit = true;
        return finish();
    }

    // Surviving set, initially everything reachable.
    std::vector<char> member(n, 0);
    std::size_t size = 0;
    {
        std::deque<StateId> queue{aut.init()};
        member[aut.init()] = 1;
        while (!queue.empty()) {
            StateId u = queue.front();
            queue.pop_front();
            ++size;
            for (StateId v : aut.successors(u))
                if (!member[v]) {
                    member[v] = 1;
                    queue.push_back(v);
                }
        }
    }

    std::vector<char> next(n, 0);
    std::vector<std::uint32_t> indegree(n, 0);
    std::deque<StateId> queue;
    while (size > 0) {
        ++verdict.metrics.owcty_rounds;

        // Keep what is reachable within the set from its accepting states.
        std::fill(next.begin(), next.end(), 0);
        for (StateId a : aut.accepting())
            if (member[a]) {
                next[a] = 1;
                queue.push_back(a);
            }
        while (!queue.empty()) {
            StateId u = queue.front();
            queue.pop_front();
            ++stats.blue_expansions;
            for (StateId v : aut.successors(u))
                if (member[v] && !next[v]) {
                    next[v] = 1;
                    queue.push_back(v);
                }
        }

        // Drop states without predecessors inside the set, repeatedly.
        std::fill(indegree.begin(), indegree.end(), 0);
        std::size_t kept = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (!next[s]) continue;
            ++kept;
            for (StateId v : aut.successors(static_cast<StateId>(s)))
                if (next[v]) ++indegree[v];
        }
        for (std::size_t s = 0; s < n; ++s)
            if (next[s] && indegree[s] == 0) queue.push_back(static_cast<StateId>(s));
        while (!queue.empty()) {
            StateId u = queue.front();
            queue.pop_front();
            next[u] = 0;
            --kept;
            ++stats.red_expansions;
            for (StateId v : aut.successors(u))
                if (next[v] && --indegree[v] == 0) queue.push_back(v);
        }

        if (trace) trace->sizes.push_back(kept);
        const bool fixpoint = kept == size;
        member.swap(next);
        size = kept;
        if (fixpoint) break;
    }

    if (size > 0) {
        for (StateId a : aut.accepting()) {
            if (!member[a]) continue;
            if (auto cycle = shortest_path(aut, a, a, member)) {
                verdict.lasso = lasso_through(aut, a, std::move(*cycle));
                break;
            }
        }
    }
    return finish();
}

}  // namespace cyclone
