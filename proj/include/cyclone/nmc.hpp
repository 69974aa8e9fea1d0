#pragma once

#include <cstdint>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

// ENDFS whose repair stage is a parallel LNDFS rooted at the dangerous state.
// Workers that finish their ENDFS pass join repairs still in progress.
Verdict nmc_ndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed);
Verdict nmc_ndfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
                 ColorStore& store);

}  // namespace cyclone
