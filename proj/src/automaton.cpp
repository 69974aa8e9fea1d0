#include "cyclone/automaton.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cyclone {

BuchiAutomaton::BuchiAutomaton(std::size_t num_states, StateId init,
                               std::vector<StateId> accepting,
                               const std::vector<std::vector<StateId>>& successors)
    : init_(init), accepting_mask_(num_states, 0), accept_index_(num_states, kNoState) {
    if (num_states == 0) throw AutomatonError("automaton needs at least one state");
    if (num_states >= kNoState) throw AutomatonError("too many states");
    if (init >= num_states) throw AutomatonError("initial state out of range");
    if (successors.size() != num_states)
        throw AutomatonError("successor table size does not match state count");

    for (StateId a : accepting) {
        if (a >= num_states) throw AutomatonError("accepting state out of range");
        accepting_mask_[a] = 1;
    }
    for (StateId s = 0; s < num_states; ++s) {
        if (accepting_mask_[s]) {
            accept_index_[s] = static_cast<StateId>(accepting_.size());
            accepting_.push_back(s);
        }
    }

    offsets_.reserve(num_states + 1);
    offsets_.push_back(0);
    std::vector<std::uint8_t> seen(num_states, 0);
    for (const auto& succ : successors) {
        for (StateId t : succ) {
            if (t >= num_states) throw AutomatonError("edge target out of range");
            if (seen[t]) throw AutomatonError("duplicate edge");
            seen[t] = 1;
            targets_.push_back(t);
        }
        for (StateId t : succ) seen[t] = 0;
        offsets_.push_back(targets_.size());
    }
}

bool BuchiAutomaton::has_edge(StateId from, StateId to) const {
    if (from >= num_states()) return false;
    auto succ = successors(from);
    return std::find(succ.begin(), succ.end(), to) != succ.end();
}

namespace {

std::string kind_name(ParseError::Kind kind) {
    switch (kind) {
    case ParseError::Kind::MalformedHeader: return "malformed header";
    case ParseError::Kind::DanglingStateId: return "dangling state id";
    case ParseError::Kind::DuplicateEdge: return "duplicate edge";
    }
    return "parse error";
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::uint64_t parse_number(std::string_view word, std::size_t line) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || end != word.data() + word.size())
        throw ParseError(ParseError::Kind::MalformedHeader, line,
                         "expected a decimal number, got '" + std::string(word) + "'");
    return value;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind_name(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

BuchiAutomaton parse_automaton(std::istream& in) {
    using Kind = ParseError::Kind;

    std::size_t num_states = 0;
    bool have_states = false;
    bool have_init = false;
    StateId init = 0;
    std::vector<StateId> accepting;
    std::vector<std::vector<StateId>> succ;
    std::unordered_set<std::uint64_t> edges;

    auto state_id = [&](std::string_view word, std::size_t line) {
        std::uint64_t id = parse_number(word, line);
        if (id >= num_states)
            throw ParseError(Kind::DanglingStateId, line,
                             "state " + std::to_string(id) + " not below " +
                                 std::to_string(num_states));
        return static_cast<StateId>(id);
    };

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty()) continue;

        const std::string_view key = words[0];
        if (!have_states) {
            if (key != "states" || words.size() != 2)
                throw ParseError(Kind::MalformedHeader, lineno, "first line must be 'states <N>'");
            std::uint64_t n = parse_number(words[1], lineno);
            if (n == 0 || n >= kNoState)
                throw ParseError(Kind::MalformedHeader, lineno, "state count out of range");
            num_states = static_cast<std::size_t>(n);
            succ.assign(num_states, {});
            have_states = true;
        } else if (key == "init") {
            if (words.size() != 2 || have_init)
                throw ParseError(Kind::MalformedHeader, lineno, "expected a single 'init <id>'");
            init = state_id(words[1], lineno);
            have_init = true;
        } else if (key == "accepting") {
            for (std::size_t i = 1; i < words.size(); ++i)
                accepting.push_back(state_id(words[i], lineno));
        } else if (key == "trans") {
            if (words.size() != 3)
                throw ParseError(Kind::MalformedHeader, lineno, "expected 'trans <src> <dst>'");
            StateId src = state_id(words[1], lineno);
            StateId dst = state_id(words[2], lineno);
            if (!edges.insert((std::uint64_t{src} << 32) | dst).second)
                throw ParseError(Kind::DuplicateEdge, lineno,
                                 std::to_string(src) + " -> " + std::to_string(dst));
            succ[src].push_back(dst);
        } else {
            throw ParseError(Kind::MalformedHeader, lineno,
                             "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!have_states) throw ParseError(Kind::MalformedHeader, lineno, "missing 'states' line");
    if (!have_init) throw ParseError(Kind::MalformedHeader, lineno, "missing 'init' line");

    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    return BuchiAutomaton(num_states, init, std::move(accepting), succ);
}

BuchiAutomaton parse_automaton(const std::string& text) {
    std::istringstream in(text);
    return parse_automaton(in);
}

void write_automaton(std::ostream& out, const BuchiAutomaton& aut) {
    out << "states " << aut.num_states() << '\n';
    out << "init " << aut.init() << '\n';
    out << "accepting";
    for (StateId a : aut.accepting()) out << ' ' << a;
    out << '\n';
    for (StateId s = 0; s < aut.num_states(); ++s)
        for (StateId t : aut.successors(s)) out << "trans " << s << ' ' << t << '\n';
}

std::string serialize(const BuchiAutomaton& aut) {
    std::ostringstream out;
    write_automaton(out, aut);
    return out.str();
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void append_permuted_successors(const BuchiAutomaton& aut, StateId s,
                                const SuccessorOrder& order,
                                std::vector<StateId>& out) {
    auto succ = aut.successors(s);
    const std::size_t base = out.size();
    out.insert(out.end(), succ.begin(), succ.end());
    if (order.identity || succ.size() < 2) return;

    // Fisher-Yates driven by a SplitMix64 stream keyed on the full order tuple.
    std::uint64_t key = mix64(order.seed);
    key = mix64(key ^ order.worker_id);
    key = mix64(key ^ (static_cast<std::uint64_t>(order.kind) + 1));
    key = mix64(key ^ s);
    for (std::size_t i = succ.size() - 1; i > 0; --i) {
        key = mix64(key);
        auto j = static_cast<std::size_t>(
            (static_cast<unsigned __int128>(key) * (i + 1)) >> 64);
        std::swap(out[base + i], out[base + j]);
    }
}

std::vector<StateId> permuted_successors(const BuchiAutomaton& aut, StateId s,
                                         const SuccessorOrder& order) {
    std::vector<StateId> out;
    append_permuted_successors(aut, s, order, out);
    return out;
}

}  // namespace cyclone
