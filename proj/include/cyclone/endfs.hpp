#pragma once

#include <cstdint>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone {

// Optimistic parallel NDFS: global blue and red, dangerous marking during red
// searches and a worker-local sequential NDFS repair from dangerous roots.
Verdict endfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed);
Verdict endfs(const BuchiAutomaton& aut, unsigned n_workers, std::uint64_t seed,
              ColorStore& store);

}  // namespace cyclone
