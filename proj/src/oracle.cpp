#include "cyclone/oracle.hpp"

#include <algorithm>
#include <deque>

namespace cyclone {

std::vector<std::vector<StateId>> reachable_sccs(const BuchiAutomaton& aut, StateId root) {
    constexpr std::uint32_t kUnvisited = 0xffffffffu;
    const std::size_t n = aut.num_states();
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<StateId> scc_stack;
    std::vector<std::vector<StateId>> sccs;

    struct Frame {
        StateId state;
        std::size_t next;
    };
    std::vector<Frame> call;
    std::uint32_t counter = 0;

    auto open = [&](StateId s) {
        index[s] = low[s] = counter++;
        scc_stack.push_back(s);
        on_stack[s] = 1;
        call.push_back({s, 0});
    };

    open(root);
    while (!call.empty()) {
        Frame& f = call.back();
        const StateId s = f.state;
        auto succ = aut.successors(s);
        if (f.next < succ.size()) {
            const StateId t = succ[f.next++];
            if (index[t] == kUnvisited) {
                open(t);
            } else if (on_stack[t]) {
                low[s] = std::min(low[s], index[t]);
            }
            continue;
        }
        call.pop_back();
        if (!call.empty()) {
            const StateId parent = call.back().state;
            low[parent] = std::min(low[parent], low[s]);
        }
        if (low[s] == index[s]) {
            std::vector<StateId> scc;
            StateId x;
            do {
                x = scc_stack.back();
                scc_stack.pop_back();
                on_stack[x] = 0;
                scc.push_back(x);
            } while (x != s);
            sccs.push_back(std::move(scc));
        }
    }
    return sccs;
}

std::optional<std::vector<StateId>> shortest_path(const BuchiAutomaton& aut, StateId from,
                                                  StateId to, const std::vector<char>& allowed) {
    const std::size_t n = aut.num_states();
    auto ok = [&](StateId s) { return allowed.empty() || allowed[s]; };
    std::vector<StateId> parent(n, kNoState);
    std::vector<char> seen(n, 0);
    std::deque<StateId> queue;

    auto unwind = [&](StateId last) {
        std::vector<StateId> path;
        for (StateId s = last; s != kNoState; s = parent[s]) path.push_back(s);
        std::reverse(path.begin(), path.end());
        return path;
    };

    if (from != to) {
        seen[from] = 1;
        queue.push_back(from);
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            if (s == to) return unwind(s);
            for (StateId t : aut.successors(s)) {
                if (seen[t] || !ok(t)) continue;
                seen[t] = 1;
                parent[t] = s;
                queue.push_back(t);
            }
        }
        return std::nullopt;
    }

    // Cycle through `from`: search from its successors back to it.
    for (StateId t : aut.successors(from)) {
        if (t == from) return std::vector<StateId>{from};
        if (seen[t] || !ok(t)) continue;
        seen[t] = 1;
        parent[t] = kNoState;
        queue.push_back(t);
    }
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (StateId t : aut.successors(s)) {
            if (t == from) {
                std::vector<StateId> cycle{from};
                auto rest = unwind(s);
                cycle.insert(cycle.end(), rest.begin(), rest.end());
                return cycle;
            }
            if (seen[t] || !ok(t)) continue;
            seen[t] = 1;
            parent[t] = s;
            queue.push_back(t);
        }
    }
    return std::nullopt;
}

std::optional<Lasso> scc_has_accepting_cycle(const BuchiAutomaton& aut) {
    for (const auto& scc : reachable_sccs(aut, aut.init())) {
        auto acc = std::find_if(scc.begin(), scc.end(),
                                [&](StateId s) { return aut.is_accepting(s); });
        if (acc == scc.end()) continue;
        if (scc.size() == 1 && !aut.has_edge(*acc, *acc)) continue;

        std::vector<char> member(aut.num_states(), 0);
        for (StateId s : scc) member[s] = 1;
        auto cycle = shortest_path(aut, *acc, *acc, member);
        std::vector<StateId> stem{aut.init()};
        if (*acc != aut.init()) stem = *shortest_path(aut, aut.init(), *acc);
        return make_lasso(aut, std::move(stem), std::move(*cycle));
    }
    return std::nullopt;
}

bool validate_lasso(const BuchiAutomaton& aut, const Lasso& lasso) {
    const std::size_t n = aut.num_states();
    const auto& stem = lasso.stem;
    const auto& cycle = lasso.cycle;
    if (stem.empty() || cycle.empty()) return false;
    for (StateId s : stem)
        if (s >= n) return false;
    for (StateId s : cycle)
        if (s >= n) return false;
    if (stem.front() != aut.init()) return false;
    if (stem.back() != cycle.front()) return false;
    for (std::size_t i = 0; i + 1 < stem.size(); ++i)
        if (!aut.has_edge(stem[i], stem[i + 1])) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!aut.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    if (lasso.accept_index >= cycle.size()) return false;
    return aut.is_accepting(cycle[lasso.accept_index]);
}

}  // namespace cyclone
