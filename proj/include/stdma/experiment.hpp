#ifndef STDMA_EXPERIMENT_HPP
#define STDMA_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdma/scheduler_baseline.hpp"
#include "stdma/scheduler_lgls.hpp"

namespace stdma {

enum class Algo { gp, lgls, optimal };

const char* to_string(Algo algo);
bool algo_from_string(const std::string& name, Algo& out);

/// Thrown when a produced schedule fails SINR verification; the offending
/// topology is serialized first so the case can be replayed.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Converts ingested units once: power stays in mW, noise dBm -> mW,
/// threshold dB -> linear.
RadioParams ingest_params(double power_mw, double noise_dbm, double gamma_db, double alpha);

/// splitmix64 finalizer; the building block of all seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Per-trial seed: mix64(mix64(mix64(master) ^ mix64(n)) ^ mix64(trial)).
/// Pure in its inputs, so any subset of an experiment reproduces the same
/// topologies and every algorithm sees the identical per-trial graph.
std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial);

/// Seed handed to a scheduler for one trial: mix64(tseed ^ mix64(tag)).
std::uint64_t algo_seed(std::uint64_t tseed, Algo algo);

struct ExperimentConfig {
    std::vector<int> node_counts;
    int trials = 1;
    double side = 3000.0;
    double power_mw = 1000.0;
    double noise_dbm = -96.0;
    double gamma_db = 7.0;
    double alpha = 4.5;
    std::vector<Algo> algorithms{Algo::lgls, Algo::gp};
    std::uint64_t master_seed = 1;
    std::string out_path;  ///< empty: caller prints the CSV itself
    int workers = 1;
    bool deterministic = false;
    GpOrdering gp_ordering = GpOrdering::interference_degree;
    /// false writes runtime_ms as 0.000 so two runs with the same config
    /// produce byte-identical CSVs (wall-clock timings never repeat).
    bool timing = true;
};

struct ResultRow {
    int n;
    int trial;
    Algo algo;
    int links;
    int schedule_length;
    double runtime_ms;
    bool verified;
};

struct SummaryRow {
    int n;
    Algo algo;
    int trials;
    double mean_len;
    double std_len;  ///< sample standard deviation, 0 for a single trial
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<SummaryRow> summary;
};

/// Runs every (node count, trial) with every configured algorithm on the
/// same per-trial topology, verifies each schedule against the SINR
/// oracle, and aggregates.  Trials run on up to cfg.workers threads; rows
/// are sorted by (n, trial, algo) afterwards so concurrency never changes
/// the output.  Writes the result CSV to cfg.out_path when set.  A failed
/// verification serializes the topology and throws VerificationFailure.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Result CSV: header "n,trial,algo,links,schedule_length,runtime_ms,verified".
std::string results_csv(const std::vector<ResultRow>& rows);
// Aggregate CSV: header "n,algo,mean_len,std_len".
std::string summary_csv(const std::vector<SummaryRow>& rows);
// Human-readable aggregate table.
std::string summary_table(const std::vector<SummaryRow>& rows);

/// One-topology convenience path used by the schedule subcommand.
struct ScheduleJob {
    Algo algo = Algo::lgls;
    GpOrdering ordering = GpOrdering::interference_degree;
    std::uint64_t seed = 0;
    bool deterministic = false;
    const LoadMap* loads = nullptr;  ///< optional demands, triggers expansion
};

struct ScheduleJobResult {
    CommGraph graph;                 ///< the scheduled graph (expanded when loads given)
    std::vector<int> physical_link;  ///< scheduled link id -> input link id
    Schedule schedule;
    std::vector<SinrReport> reports;
    bool feasible;
};

ScheduleJobResult run_schedule_job(const CommGraph& g, const ScheduleJob& job);

/// Per-slot diagnostic lines (slot, members, min SINR, margin, verdict).
std::string format_slot_reports(const Schedule& s, const std::vector<SinrReport>& reports,
                                double gamma_lin);

// Loads CSV: header "link_id,demand", one row per link, every link of the
// graph covered exactly once, demand >= 1.
LoadMap read_loads_csv(std::istream& in, std::size_t link_count);
LoadMap load_loads(const std::string& path, std::size_t link_count);

}  // namespace stdma

#endif  // STDMA_EXPERIMENT_HPP
