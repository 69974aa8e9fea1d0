#include "cyclone/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include "cyclone/endfs.hpp"
#include "cyclone/generators.hpp"
#include "cyclone/lndfs.hpp"
#include "cyclone/ndfs.hpp"
#include "cyclone/nmc.hpp"
#include "cyclone/oracle.hpp"
#include "cyclone/owcty.hpp"
#include "cyclone/swarm.hpp"

namespace cyclone::bench {

std::string to_string(Algorithm alg) {
    switch (alg) {
    case Algorithm::Ndfs: return "ndfs";
    case Algorithm::Swarm: return "swarm";
    case Algorithm::Lndfs: return "lndfs";
    case Algorithm::Endfs: return "endfs";
    case Algorithm::Nmc: return "nmc";
    case Algorithm::Owcty: return "owcty";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    for (auto alg : {Algorithm::Ndfs, Algorithm::Swarm, Algorithm::Lndfs, Algorithm::Endfs,
                     Algorithm::Nmc, Algorithm::Owcty})
        if (to_string(alg) == name) return alg;
    throw InvalidConfig("unknown algorithm '" + name + "'");
}

void RunConfig::validate() const {
    if (workers == 0) throw InvalidConfig("workers must be at least 1");
    if (repeats == 0) throw InvalidConfig("repeats must be at least 1");
    if (input.empty()) throw InvalidConfig("no input given");
}

BuchiAutomaton resolve_input(const std::string& input) {
    if (is_generator_spec(input)) {
        try {
            return generate_from_spec(input);
        } catch (const GeneratorError& e) {
            throw InvalidConfig(e.what());
        }
    }
    std::ifstream in(input);
    if (!in) throw InputNotFound("cannot open input '" + input + "'");
    return parse_automaton(in);
}

Verdict detect(const BuchiAutomaton& aut, Algorithm alg, unsigned workers, std::uint64_t seed,
               bool heuristic, bool allred, ColorStore* store) {
    std::optional<ColorStore> own;
    if (store == nullptr) store = &own.emplace(aut);
    switch (alg) {
    case Algorithm::Ndfs: return ndfs(aut, {0, seed, SearchKind::Blue, false}, allred);
    case Algorithm::Swarm: return swarm_ndfs(aut, workers, seed, heuristic);
    case Algorithm::Lndfs: return lndfs(aut, workers, seed, heuristic, *store);
    case Algorithm::Endfs: return endfs(aut, workers, seed, *store);
    case Algorithm::Nmc: return nmc_ndfs(aut, workers, seed, *store);
    case Algorithm::Owcty: return owcty(aut);
    }
    throw InvalidConfig("unknown algorithm");
}

std::vector<BenchRecord> run(const RunConfig& config, const BuchiAutomaton& aut,
                             bool oracle_check) {
    config.validate();
    std::optional<bool> expected;
    if (oracle_check) expected = scc_has_accepting_cycle(aut).has_value();

    const bool single = config.algorithm == Algorithm::Owcty || config.algorithm == Algorithm::Ndfs;
    const unsigned workers = single ? 1 : config.workers;
    std::vector<BenchRecord> records;
    for (unsigned r = 0; r < config.repeats; ++r) {
        const std::uint64_t seed = config.seed + r;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v = detect(aut, config.algorithm, workers, seed, !single && config.heuristic,
                           config.allred);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        if (v.lasso && !validate_lasso(aut, *v.lasso))
            throw VerdictCorrupt(to_string(config.algorithm) + " reported an invalid lasso on " +
                                 config.input + " (seed " + std::to_string(seed) + ")");
        if (expected && *expected != v.cycle_found())
            throw VerdictCorrupt(to_string(config.algorithm) + " disagrees with the oracle on " +
                                 config.input + " (seed " + std::to_string(seed) + ")");

        records.push_back({config.input, config.algorithm, workers, seed, r, v.cycle_found(),
                           std::max(wall, 1e-9), v.total(), v.metrics});
    }
    return records;
}

std::vector<BenchRecord> run(const RunConfig& config, bool oracle_check) {
    config.validate();
    return run(config, resolve_input(config.input), oracle_check);
}

void write_records(std::ostream& out, const std::vector<BenchRecord>& records, bool header) {
    out.precision(9);
    if (header) out << kRecordHeader << '\n';
    for (const auto& r : records) {
        out << r.input << ',' << to_string(r.algorithm) << ',' << r.workers << ',' << r.seed << ','
            << r.repeat << ',' << (r.cycle ? "CYCLE" : "NO-CYCLE") << ',' << r.wall_time_s << ','
            << r.totals.blue_expansions << ',' << r.totals.red_expansions << ','
            << r.totals.repair_expansions << ',' << r.metrics.dangerous_count << ','
            << r.totals.waits << ',' << r.totals.helper_joins << ',' << r.metrics.owcty_rounds
            << ',' << r.metrics.map_hits << '\n';
    }
}

namespace {

double mean_wall(const std::vector<BenchRecord>& records) {
    double sum = 0.0;
    for (const auto& r : records) sum += r.wall_time_s;
    return sum / static_cast<double>(records.size());
}

bool common_verdict(const std::vector<BenchRecord>& records) {
    const bool cycle = records.front().cycle;
    for (const auto& r : records)
        if (r.cycle != cycle)
            throw VerdictCorrupt("verdict differs between repeats of " + to_string(r.algorithm) +
                                 " on " + r.input);
    return cycle;
}

}  // namespace

SweepResult sweep(const std::vector<RunConfig>& configs, bool oracle_check) {
    if (configs.empty()) throw InvalidConfig("sweep needs at least one configuration");

    SweepResult result;
    std::map<std::string, BuchiAutomaton> inputs;
    auto automaton = [&](const std::string& input) -> const BuchiAutomaton& {
        auto it = inputs.find(input);
        if (it == inputs.end()) it = inputs.emplace(input, resolve_input(input)).first;
        return it->second;
    };

    std::map<std::string, double> baseline;
    for (const auto& config : configs) {
        auto records = run(config, automaton(config.input), oracle_check);
        const unsigned workers = records.front().workers;
        if (config.algorithm == Algorithm::Ndfs && workers == 1 &&
            !baseline.contains(config.input))
            baseline[config.input] = mean_wall(records);
        result.rows.push_back({config.input, config.algorithm, workers,
                               static_cast<unsigned>(records.size()), common_verdict(records),
                               mean_wall(records), 0.0});
        result.records.insert(result.records.end(), records.begin(), records.end());
    }

    for (auto& row : result.rows) {
        if (!baseline.contains(row.input)) {
            RunConfig base{Algorithm::Ndfs, 1, configs.front().seed, configs.front().repeats,
                           false, false, row.input};
            baseline[row.input] = mean_wall(run(base, automaton(row.input), oracle_check));
        }
        row.speedup = baseline[row.input] / row.mean_wall_time_s;
    }
    return result;
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows) {
    out.precision(9);
    out << kSweepHeader << '\n';
    for (const auto& r : rows)
        out << r.input << ',' << to_string(r.algorithm) << ',' << r.workers << ',' << r.runs << ','
            << (r.cycle ? "CYCLE" : "NO-CYCLE") << ',' << r.mean_wall_time_s << ',' << r.speedup
            << '\n';
}

Watchdog::Watchdog(std::chrono::milliseconds limit, std::string what)
    : thread_([this, limit, what = std::move(what)] {
          std::unique_lock lock(mutex_);
          if (!cv_.wait_for(lock, limit, [this] { return done_; })) {
              std::cerr << "watchdog: " << what << " exceeded " << limit.count() << " ms\n";
              std::_Exit(kWatchdogExitCode);
          }
      }) {}

Watchdog::~Watchdog() {
    {
        std::lock_guard lock(mutex_);
        done_ = true;
    }
    cv_.notify_all();
}

std::chrono::milliseconds Watchdog::limit_from_env() {
    if (const char* env = std::getenv("CYCLONE_WATCHDOG_SECS")) {
        char* end = nullptr;
        const double secs = std::strtod(env, &end);
        if (end != env && *end == '\0' && secs > 0)
            return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
    }
    return std::chrono::seconds(60);
}

}  // namespace cyclone::bench
