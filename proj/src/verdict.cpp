#include "cyclone/verdict.hpp"

#include <algorithm>

namespace cyclone {

Lasso make_lasso(const BuchiAutomaton& aut, std::vector<StateId> stem, std::vector<StateId> cycle) {
    Lasso lasso{std::move(stem), std::move(cycle), 0};
    auto it = std::find_if(lasso.cycle.begin(), lasso.cycle.end(),
                           [&](StateId s) { return aut.is_accepting(s); });
    lasso.accept_index = static_cast<std::size_t>(it - lasso.cycle.begin());
    return lasso;
}

WorkStats Verdict::total() const {
    WorkStats sum;
    for (const auto& w : workers) {
        sum.blue_expansions += w.blue_expansions;
        sum.red_expansions += w.red_expansions;
        sum.repair_expansions += w.repair_expansions;
        sum.max_stack_depth = std::max(sum.max_stack_depth, w.max_stack_depth);
        sum.waits += w.waits;
        sum.helper_joins += w.helper_joins;
        sum.wall_time = std::max(sum.wall_time, w.wall_time);
    }
    return sum;
}

}  // namespace cyclone
