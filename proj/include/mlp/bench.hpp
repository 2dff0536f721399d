#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlp/core.hpp"
#include "mlp/search.hpp"
#include "mlp/tsplib.hpp"

namespace mlp {

/// Generator spec usable in place of an instance file.
struct GenSpec {
    int n = 10;
    std::uint64_t seed = 1;
    int box = 100;
};

struct ExperimentConfig {
    std::vector<std::string> instance_paths;
    std::vector<GenSpec> generated;
    std::vector<Strategy> strategies;
    int runs_per_instance = 10;
    std::uint64_t base_seed = 1; ///< run k uses seed base_seed + k
    SearchParams params;         ///< template; strategy and seed set per run
    Variant variant = Variant::circuit;
    std::string out_dir; ///< empty: nothing written to disk
    int jobs = 1;        ///< >1 runs independent solves on a worker pool
    bool keep_runlogs = false;
};

struct RunRecord {
    int run = 0;
    std::uint64_t seed = 0;
    Cost cost = 0;
    double seconds = 0;
};

struct ResultRow {
    std::string instance;
    Strategy strategy = Strategy::baseline;
    Cost best = 0;
    double average = 0;
    double avg_seconds = 0;
    std::vector<RunRecord> runs;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<std::string> errors; ///< one message per failed instance
};

/// Executes runs_per_instance seeded solves per (instance, strategy).
/// Cost columns are deterministic for a fixed config; wall times are not.
/// Unreadable instances are recorded as errors and the rest of the work
/// continues. When out_dir is set, writes one raw per-run CSV per
/// (instance, strategy) plus a summary CSV (and JSON-lines run logs when
/// keep_runlogs).
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Percentage time gap between a data-mining heuristic and its base:
/// 100 * (dm - base) / base. Throws std::invalid_argument when base <= 0.
double compute_gap(double dm_time, double base_time);

struct TttResult {
    int executions = 0;
    std::vector<std::optional<double>> per_run_hit; ///< seconds, or no-hit marker
    std::vector<double> hits_sorted;
    std::vector<std::pair<double, double>> cdf; ///< (t_i, i/executions)
};

/// Time-to-target: runs `executions` seeded solves that stop as soon as the
/// incumbent reaches the target, recording the hit time of each (or a
/// did-not-hit marker when the run completes above the target).
TttResult ttt_experiment(const Instance& instance, SearchParams params, Cost target,
                         int executions);

/// CSV with one "run,hit_seconds" line per execution followed by the CDF
/// pairs, ready for plotting.
std::string ttt_to_csv(const TttResult& r);

} // namespace mlp
