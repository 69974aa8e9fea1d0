#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/verdict.hpp"

namespace cyclone::bench {

enum class Algorithm { Ndfs, Swarm, Lndfs, Endfs, Nmc, Owcty };

std::string to_string(Algorithm alg);
// Throws InvalidConfig for unknown names.
Algorithm parse_algorithm(const std::string& name);

class InputNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A reported lasso failed validation, or a verdict disagreed with the oracle.
class VerdictCorrupt : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Algorithm algorithm = Algorithm::Ndfs;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    unsigned repeats = 5;
    bool heuristic = false;
    bool allred = false;
    // File path or inline generator spec (see generate_from_spec).
    std::string input;

    void validate() const;
};

struct BenchRecord {
    std::string input;
    Algorithm algorithm;
    unsigned workers;
    std::uint64_t seed;
    unsigned repeat;
    bool cycle;
    double wall_time_s;
    WorkStats totals;
    RunMetrics metrics;
};

// Loads a file or expands a generator spec.
BuchiAutomaton resolve_input(const std::string& input);

// Runs one detector once; `store` receives the shared colors of the parallel
// detectors when given.
Verdict detect(const BuchiAutomaton& aut, Algorithm alg, unsigned workers, std::uint64_t seed,
               bool heuristic, bool allred, ColorStore* store = nullptr);

// `repeats` runs with seeds seed, seed+1, ...; every witness is validated
// (VerdictCorrupt otherwise). With `oracle_check`, verdicts are compared to the
// SCC oracle as well.
std::vector<BenchRecord> run(const RunConfig& config, bool oracle_check = false);
std::vector<BenchRecord> run(const RunConfig& config, const BuchiAutomaton& aut,
                             bool oracle_check = false);

inline constexpr const char* kRecordHeader =
    "input,alg,workers,seed,repeat,verdict,wall_time_s,blue_exp,red_exp,repair_exp,"
    "dangerous_count,waits,helper_joins,owcty_rounds,map_hits";

void write_records(std::ostream& out, const std::vector<BenchRecord>& records, bool header = true);

struct SweepRow {
    std::string input;
    Algorithm algorithm;
    unsigned workers;
    unsigned runs;
    bool cycle;
    double mean_wall_time_s;
    // Mean wall time of ndfs/workers=1 on the same input divided by ours.
    double speedup;
};

inline constexpr const char* kSweepHeader =
    "input,alg,workers,runs,verdict,mean_wall_time_s,speedup";

struct SweepResult {
    std::vector<BenchRecord> records;
    std::vector<SweepRow> rows;
};

// Runs every config and aggregates per (input, alg, workers). The ndfs
// baseline is run per input when the configs do not include it.
SweepResult sweep(const std::vector<RunConfig>& configs, bool oracle_check);

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows);

inline constexpr int kWatchdogExitCode = 3;

// Kills the process with exit code 3 if it is still alive after `limit`.
class Watchdog {
public:
    Watchdog(std::chrono::milliseconds limit, std::string what);
    ~Watchdog();
    Watchdog(const Watchdog&) = delete;
    Watchdog& operator=(const Watchdog&) = delete;

    // CYCLONE_WATCHDOG_SECS, default 60.
    static std::chrono::milliseconds limit_from_env();

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    bool done_ = false;
    std::jthread thread_;
};

}  // namespace cyclone::bench
