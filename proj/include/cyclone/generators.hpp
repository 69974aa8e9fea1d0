#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyclone/automaton.hpp"

namespace cyclone {

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A stem of `stem_len` states from the initial state into a simple cycle of
// `cycle_len` states. Exactly one state is accepting: the cycle entry when
// `accepting_on_cycle`, otherwise the initial state. With stem_len == 0 the
// initial state is on the cycle, so the off-cycle variant adds one accepting
// deadlock state hanging off the cycle entry.
BuchiAutomaton gen_lasso(std::size_t stem_len, std::size_t cycle_len, bool accepting_on_cycle);

// Random digraph on n states: each ordered pair is an edge with probability
// avg_out_degree / n (capped at 1), successors ascending. Each state is
// accepting with probability accept_prob. init = 0.
BuchiAutomaton gen_random(std::size_t n, double avg_out_degree, double accept_prob,
                          std::uint64_t seed);

// init fans out to `width` disjoint chains of `depth` states. One seed-chosen
// chain ends in a 2-cycle with an extra accepting state; the others deadlock.
// With `with_cycle == false` the closing edge is dropped and no accepting
// cycle exists.
BuchiAutomaton gen_needle(std::size_t width, std::size_t depth, std::uint64_t seed,
                          bool with_cycle = true);

// The chain index gen_needle() places the cycle on.
std::size_t needle_chain(std::size_t width, std::uint64_t seed);

// Inline generator specs: `lasso:<stem>:<cycle>:acc|noacc`,
// `random:<n>:<degree>:<p>:<seed>`, `needle:<width>:<depth>:<seed>`.
bool is_generator_spec(const std::string& spec);
BuchiAutomaton generate_from_spec(const std::string& spec);

}  // namespace cyclone
