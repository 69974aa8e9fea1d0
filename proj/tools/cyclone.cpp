// cyclone: accepting-cycle detection, benchmarking and swarm statistics.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "cyclone/automaton.hpp"
#include "cyclone/bench.hpp"
#include "cyclone/color_store.hpp"
#include "cyclone/generators.hpp"
#include "cyclone/oracle.hpp"
#include "cyclone/stats.hpp"

namespace {

using namespace cyclone;

constexpr int kUsageError = 1;
constexpr int kVerdictCorrupt = 2;

// Writes to the named file, or stdout for "" and "-".
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw bench::InvalidConfig("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void print_path(std::ostream& out, const char* label, const std::vector<StateId>& path) {
    out << label;
    for (StateId s : path) out << ' ' << s;
    out << '\n';
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
    BuchiAutomaton aut = bench::resolve_input(spec);
    Output out(out_path);
    write_automaton(out.stream(), aut);
    return 0;
}

struct CheckOptions {
    std::string input;
    std::string alg = "ndfs";
    unsigned workers = 1;
    std::uint64_t seed = 0;
    bool heuristic = false;
    bool allred = false;
    bool oracle = false;
    std::string dump_colors;
};

int cmd_check(const CheckOptions& opt) {
    const auto alg = bench::parse_algorithm(opt.alg);
    if (opt.workers == 0) throw bench::InvalidConfig("workers must be at least 1");
    BuchiAutomaton aut = bench::resolve_input(opt.input);

    ColorStore store(aut);
    Verdict verdict;
    {
        bench::Watchdog watchdog(bench::Watchdog::limit_from_env(), "check " + opt.input);
        verdict = bench::detect(aut, alg, opt.workers, opt.seed, opt.heuristic, opt.allred, &store);
    }

    if (verdict.lasso) {
        std::cout << "CYCLE\n";
        print_path(std::cout, "stem:", verdict.lasso->stem);
        print_path(std::cout, "cycle:", verdict.lasso->cycle);
    } else {
        std::cout << "NO-CYCLE\n";
    }

    if (!opt.dump_colors.empty()) {
        Output out(opt.dump_colors);
        store.dump_csv(out.stream());
    }

    if (verdict.lasso && !validate_lasso(aut, *verdict.lasso)) {
        std::cerr << "error: reported lasso does not validate\n";
        return kVerdictCorrupt;
    }
    if (opt.oracle) {
        const bool expected = scc_has_accepting_cycle(aut).has_value();
        if (expected != verdict.cycle_found()) {
            std::cerr << "error: oracle says " << (expected ? "CYCLE" : "NO-CYCLE") << '\n';
            return kVerdictCorrupt;
        }
    }
    return 0;
}

struct BenchOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> algs{"ndfs"};
    std::vector<unsigned> workers{1};
    unsigned repeats = 5;
    std::uint64_t seed = 0;
    bool heuristic = false;
    bool allred = false;
    bool oracle = false;
    std::string out;
    std::string summary;
};

int cmd_bench(const BenchOptions& opt) {
    std::vector<bench::RunConfig> configs;
    for (const auto& input : opt.inputs)
        for (const auto& name : opt.algs) {
            const auto alg = bench::parse_algorithm(name);
            if (alg == bench::Algorithm::Owcty || alg == bench::Algorithm::Ndfs) {
                configs.push_back({alg, 1, opt.seed, opt.repeats, false, opt.allred, input});
                continue;
            }
            for (unsigned w : opt.workers)
                configs.push_back({alg, w, opt.seed, opt.repeats, opt.heuristic, opt.allred, input});
        }

    bench::SweepResult result;
    {
        bench::Watchdog watchdog(bench::Watchdog::limit_from_env(), "bench");
        result = bench::sweep(configs, opt.oracle);
    }
    Output out(opt.out);
    bench::write_records(out.stream(), result.records);
    if (!opt.summary.empty()) {
        Output summary(opt.summary);
        bench::write_sweep(summary.stream(), result.rows);
    }
    return 0;
}

int cmd_dist(const std::string& samples_path, const std::vector<unsigned>& ns,
             const std::string& out_path) {
    std::ifstream in(samples_path);
    if (!in) throw bench::InputNotFound("cannot open samples '" + samples_path + "'");
    const auto dist = stats::EmpiricalDistribution::read(in);

    Output out(out_path);
    auto& os = out.stream();
    os.precision(12);
    os << "N,expected_min,stddev,speedup\n";
    for (unsigned n : ns) {
        const stats::SwarmSize size(n);
        const auto moments = stats::expected_min(dist, size);
        os << n << ',' << moments.mean << ',' << moments.stddev << ',';
        try {
            os << stats::speedup(dist, size);
        } catch (const stats::ZeroTime&) {
            os << "inf";
        }
        os << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accepting-cycle detection for Büchi automata"};
    app.require_subcommand(1);

    std::string gen_spec, gen_out;
    auto* gen = app.add_subcommand("gen", "Write a generated automaton");
    gen->add_option("spec", gen_spec, "lasso:S:C:acc|noacc, random:N:D:P:SEED, needle:W:D:SEED")
        ->required();
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "Run one detector and print the verdict");
    check->add_option("input", check_opt.input, "Automaton file or generator spec")->required();
    check->add_option("--alg", check_opt.alg, "ndfs|swarm|lndfs|endfs|nmc|owcty");
    check->add_option("--workers", check_opt.workers, "Worker count")->check(CLI::PositiveNumber);
    check->add_option("--seed", check_opt.seed, "Permutation seed");
    check->add_flag("--heuristic", check_opt.heuristic, "Prefer globally unvisited successors");
    check->add_flag("--allred", check_opt.allred, "allred extension for sequential ndfs");
    check->add_flag("--oracle", check_opt.oracle, "Cross-check against the SCC oracle");
    check->add_option("--dump-colors", check_opt.dump_colors,
                      "Write state,red,blue,dangerous,count CSV after the run");

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark detectors, CSV per run");
    bench_cmd->add_option("inputs", bench_opt.inputs, "Automaton files or generator specs")
        ->required();
    bench_cmd->add_option("--algs", bench_opt.algs, "Algorithms")->delimiter(',');
    bench_cmd->add_option("--workers", bench_opt.workers, "Worker counts")->delimiter(',');
    bench_cmd->add_option("--repeats", bench_opt.repeats, "Runs per configuration")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_opt.seed, "First seed; repeat r uses seed + r");
    bench_cmd->add_flag("--heuristic", bench_opt.heuristic, "Fresh-successor heuristic");
    bench_cmd->add_flag("--allred", bench_opt.allred, "allred for sequential ndfs");
    bench_cmd->add_flag("--oracle", bench_opt.oracle, "Cross-check every verdict");
    bench_cmd->add_option("-o,--output", bench_opt.out, "Per-run CSV (default stdout)");
    bench_cmd->add_option("--summary", bench_opt.summary, "Aggregate CSV with speedups");

    std::string dist_samples, dist_out;
    std::vector<unsigned> dist_ns{1, 2, 4, 8, 16};
    auto* dist = app.add_subcommand("dist", "Expected minimum of N runs from measured samples");
    dist->add_option("samples", dist_samples, "One completion time (seconds) per line")
        ->required();
    dist->add_option("--n", dist_ns, "Swarm sizes")->delimiter(',')->check(CLI::PositiveNumber);
    dist->add_option("-o,--output", dist_out, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*gen) return cmd_gen(gen_spec, gen_out);
        if (*check) return cmd_check(check_opt);
        if (*bench_cmd) return cmd_bench(bench_opt);
        if (*dist) return cmd_dist(dist_samples, dist_ns, dist_out);
    } catch (const bench::VerdictCorrupt& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerdictCorrupt;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
