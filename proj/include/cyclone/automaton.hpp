#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclone {

using StateId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// Explicit Büchi automaton: dense state ids, one initial state, an accepting
// set and per-state successor lists in canonical (input) order.
//
// Immutable after construction, so any number of workers may read it
// concurrently.
class BuchiAutomaton {
public:
    BuchiAutomaton(std::size_t num_states, StateId init,
                   std::vector<StateId> accepting,
                   const std::vector<std::vector<StateId>>& successors);

    std::size_t num_states() const { return accepting_mask_.size(); }
    std::size_t num_edges() const { return targets_.size(); }
    StateId init() const { return init_; }

    bool is_accepting(StateId s) const { return accepting_mask_[s] != 0; }

    // Sorted ascending.
    std::span<const StateId> accepting() const { return accepting_; }

    // Dense index of an accepting state within accepting(); kNoState otherwise.
    StateId accepting_index(StateId s) const { return accept_index_[s]; }

    std::span<const StateId> successors(StateId s) const {
        return {targets_.data() + offsets_[s], targets_.data() + offsets_[s + 1]};
    }

    bool has_edge(StateId from, StateId to) const;

    bool operator==(const BuchiAutomaton& other) const = default;

private:
    StateId init_;
    std::vector<std::uint8_t> accepting_mask_;
    std::vector<StateId> accepting_;
    std::vector<StateId> accept_index_;
    std::vector<std::size_t> offsets_;
    std::vector<StateId> targets_;
};

// Raised by the BuchiAutomaton constructor when the structure is inconsistent.
class AutomatonError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, DanglingStateId, DuplicateEdge };

    ParseError(Kind kind, std::size_t line, const std::string& detail);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

// Line-oriented text format:
//   states <N>          first non-comment line
//   init <id>
//   accepting <id>*
//   trans <src> <dst>   one per edge, order defines the successor order
// '#' starts a comment.
BuchiAutomaton parse_automaton(std::istream& in);
BuchiAutomaton parse_automaton(const std::string& text);

// Canonical form: header lines, accepting ids ascending, then trans lines
// grouped by source in successor order.
std::string serialize(const BuchiAutomaton& aut);
void write_automaton(std::ostream& out, const BuchiAutomaton& aut);

enum class SearchKind : std::uint8_t { Blue, Red };

// Per-worker successor permutation key. Permutations are a pure function of
// (seed, worker_id, kind, state); `identity` selects the canonical order.
struct SuccessorOrder {
    std::uint32_t worker_id = 0;
    std::uint64_t seed = 0;
    SearchKind kind = SearchKind::Blue;
    bool identity = false;

    static SuccessorOrder canonical() { return {0, 0, SearchKind::Blue, true}; }

    SuccessorOrder with_kind(SearchKind k) const {
        SuccessorOrder o = *this;
        o.kind = k;
        return o;
    }
};

// Appends the permuted successor list of `s` to `out`.
void append_permuted_successors(const BuchiAutomaton& aut, StateId s,
                                const SuccessorOrder& order,
                                std::vector<StateId>& out);

std::vector<StateId> permuted_successors(const BuchiAutomaton& aut, StateId s,
                                         const SuccessorOrder& order);

// SplitMix64 finalizer; used to derive independent seeds and permutation keys.
std::uint64_t mix64(std::uint64_t x);

}  // namespace cyclone
