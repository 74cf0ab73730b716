#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarmkit/aco.hpp"
#include "swarmkit/core.hpp"
#include "swarmkit/swarm.hpp"

namespace swarmkit::harness {

/// Raised when the output location cannot be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyAlgorithm = std::variant<swarm::AlgorithmConfig, aco::AcoConfig>;
using AnyProblem = std::variant<Problem, aco::TspInstance>;

struct AlgorithmEntry {
    std::string label;  // unique; defaults to the registry name
    AnyAlgorithm config;

    [[nodiscard]] std::string_view name() const;
    [[nodiscard]] bool is_discrete() const noexcept {
        return std::holds_alternative<aco::AcoConfig>(config);
    }
};

struct ProblemEntry {
    std::string label;  // unique; "<name>_d<dimension>" or the TSP file stem
    AnyProblem problem;

    [[nodiscard]] bool is_discrete() const noexcept {
        return std::holds_alternative<aco::TspInstance>(problem);
    }
};

/// Campaign description. Continuous algorithms pair with every benchmark
/// problem and ACO pairs with every TSP problem, in config order.
struct ExperimentConfig {
    std::vector<AlgorithmEntry> algorithms;
    std::vector<ProblemEntry> problems;
    std::size_t runs = 30;
    std::uint64_t base_seed = 0;
    Budget budget{1000, std::nullopt};
    std::filesystem::path output_dir = "results";
};

/// Parse YAML config text. `source` prefixes error messages; relative TSP
/// paths resolve against `base_dir`. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text, std::string_view source,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Run seed: mix64(mix64(mix64(base_seed ^ fnv1a64(algorithm)) ^ fnv1a64(problem)) ^ run_index).
/// Depends only on labels and the run index, never on scheduling order.
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view algorithm,
                          std::string_view problem, std::size_t run_index);

struct RunRecord {
    std::string algorithm;
    std::string problem;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    RunResult result;
    std::optional<std::string> error;  // set when the run threw

    [[nodiscard]] bool ok() const noexcept { return !error.has_value(); }
};

struct SummaryRow {
    std::string algorithm;
    std::string problem;
    std::size_t runs = 0;  // successful runs
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double std = 0.0;  // sample standard deviation; 0 for a single run
    double mean_evals = 0.0;
    double mean_wall_time_s = 0.0;
};

/// Statistics over final best fitnesses of the successful runs in `records`.
SummaryRow summarize(std::string algorithm, std::string problem,
                     std::span<const RunRecord> records);

struct Campaign {
    std::vector<RunRecord> runs;  // ordered by (pair, run_index)
    std::vector<SummaryRow> summary;

    [[nodiscard]] std::size_t failures() const;
};

/// One record per (pair, run). A run that throws is recorded with its error
/// and the campaign continues. `jobs` > 1 runs on that many threads; results
/// are gathered by key, never by completion order.
Campaign run_experiment(const ExperimentConfig& config, std::size_t jobs = 1);

// -- export -----------------------------------------------------------------

inline constexpr std::string_view kSummaryCsvHeader =
    "algorithm,problem,runs,best,worst,mean,median,std,mean_evals,mean_wall_time_s";

enum class Format { csv, json };

/// Create `dir` and `dir/traces` and prove they are writable. Throws IoError.
void preflight_output(const std::filesystem::path& dir);

/// Writes summary.csv / summary.json, traces/<algo>_<problem>_<run>.csv,
/// runs.csv and ranking.txt. Reals use 17 significant digits.
void export_results(const Campaign& campaign, const std::filesystem::path& dir,
                    std::span<const Format> formats = std::array{Format::csv, Format::json});

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
std::string summary_json(std::span<const SummaryRow> rows);
std::vector<SummaryRow> parse_summary_json(std::string_view text);
void write_trace_csv(std::ostream& out, const RunResult& result);
std::string trace_filename(const RunRecord& record);

/// Per-problem ranking by mean final fitness plus mean rank across problems.
std::string ranking_report(std::span<const SummaryRow> rows);

/// Runs the four root-finding cases for p(x) = x^2 + 9x - 10 and prints a table.
void newton_demo(std::ostream& out);

/// `list` subcommand text.
void list_registry(std::ostream& out);

}  // namespace swarmkit::harness
