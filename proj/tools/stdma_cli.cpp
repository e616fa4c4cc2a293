#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stdma/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct RadioFlags {
    double alpha = 4.5;
    double gamma_db = 7.0;
    double power_mw = 1000.0;
    double noise_dbm = -96.0;
};

void add_radio_flags(CLI::App* cmd, RadioFlags& flags) {
    cmd->add_option("--alpha", flags.alpha, "Path-loss exponent");
    cmd->add_option("--gamma-db", flags.gamma_db, "SINR threshold [dB]");
    cmd->add_option("--power-mw", flags.power_mw, "Transmit power [mW]");
    cmd->add_option("--noise-dbm", flags.noise_dbm, "Noise power [dBm]");
}

const std::map<std::string, stdma::GpOrdering> kOrderings = {
    {"input", stdma::GpOrdering::input},
    {"random", stdma::GpOrdering::random},
    {"longest-link-first", stdma::GpOrdering::longest_link_first},
    {"interference-degree", stdma::GpOrdering::interference_degree},
};

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

struct ScheduleArgs {
    std::string topology_path;
    int nodes = 0;
    double side = 3000.0;
    std::uint64_t seed = 1;
    stdma::Algo algo = stdma::Algo::lgls;
    stdma::GpOrdering ordering = stdma::GpOrdering::interference_degree;
    std::string loads_path;
    std::string out_path;
    std::string links_out;
    std::string line_graph_out;
    bool deterministic = false;
    RadioFlags radio;
};

int run_schedule(const ScheduleArgs& args) {
    const stdma::RadioParams params = stdma::ingest_params(
        args.radio.power_mw, args.radio.noise_dbm, args.radio.gamma_db, args.radio.alpha);

    std::vector<stdma::Node> nodes;
    if (!args.topology_path.empty()) {
        nodes = stdma::load_topology(args.topology_path);
    } else if (args.nodes >= 1) {
        nodes = stdma::generate_topology(args.nodes, args.side, args.seed);
    } else {
        std::fprintf(stderr, "error: provide --topology <csv> or --nodes <count>\n");
        return kExitInputError;
    }
    const stdma::CommGraph g = stdma::build_comm_graph(std::move(nodes), params);

    if (!args.links_out.empty()) {
        std::ofstream out(args.links_out);
        if (!out) throw std::runtime_error("cannot write '" + args.links_out + "'");
        stdma::write_links_csv(out, g);
    }
    if (!args.line_graph_out.empty()) {
        std::ofstream out(args.line_graph_out);
        if (!out) throw std::runtime_error("cannot write '" + args.line_graph_out + "'");
        stdma::write_line_graph_csv(out, stdma::build_line_graph(g));
    }

    stdma::LoadMap loads;
    stdma::ScheduleJob job;
    job.algo = args.algo;
    job.ordering = args.ordering;
    job.seed = stdma::algo_seed(args.seed, args.algo);
    job.deterministic = args.deterministic;
    if (!args.loads_path.empty()) {
        loads = stdma::load_loads(args.loads_path, g.links.size());
        job.loads = &loads;
    }

    const stdma::ScheduleJobResult res = stdma::run_schedule_job(g, job);
    if (!res.feasible) {
        std::fprintf(stderr, "schedule failed SINR verification:\n%s",
                     stdma::format_slot_reports(res.schedule, res.reports, params.gamma_lin)
                         .c_str());
        return kExitVerificationFailure;
    }
    write_or_print(stdma::schedule_csv(res.graph, res.schedule, &res.physical_link),
                   args.out_path);
    std::fprintf(stderr, "algo=%s links=%zu slots=%d verified=true\n",
                 stdma::to_string(args.algo), res.graph.links.size(), res.schedule.num_slots);
    return kExitOk;
}

struct ExperimentArgs {
    std::vector<int> node_counts;
    int trials = 1;
    double side = 3000.0;
    std::uint64_t seed = 1;
    std::vector<std::string> algo_names{"lgls", "gp"};
    stdma::GpOrdering ordering = stdma::GpOrdering::interference_degree;
    int workers = 1;
    std::string out_path;
    std::string summary_out;
    bool no_timing = false;
    bool deterministic = false;
    RadioFlags radio;
};

int run_experiment_cmd(const ExperimentArgs& args) {
    stdma::ExperimentConfig cfg;
    cfg.node_counts = args.node_counts;
    cfg.trials = args.trials;
    cfg.side = args.side;
    cfg.master_seed = args.seed;
    cfg.power_mw = args.radio.power_mw;
    cfg.noise_dbm = args.radio.noise_dbm;
    cfg.gamma_db = args.radio.gamma_db;
    cfg.alpha = args.radio.alpha;
    cfg.workers = args.workers;
    cfg.out_path = args.out_path;
    cfg.deterministic = args.deterministic;
    cfg.gp_ordering = args.ordering;
    cfg.timing = !args.no_timing;

    cfg.algorithms.clear();
    for (const std::string& name : args.algo_names) {
        stdma::Algo algo;
        if (!stdma::algo_from_string(name, algo))
            throw std::invalid_argument("unknown algorithm '" + name + "'");
        if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), algo) == cfg.algorithms.end())
            cfg.algorithms.push_back(algo);
    }

    const stdma::ExperimentResult result = stdma::run_experiment(cfg);
    if (cfg.out_path.empty()) std::fputs(stdma::results_csv(result.rows).c_str(), stdout);
    if (!args.summary_out.empty()) write_or_print(stdma::summary_csv(result.summary), args.summary_out);
    std::fputs(stdma::summary_table(result.summary).c_str(), stderr);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"STDMA link scheduling under the SINR interference model"};
    app.require_subcommand(1);

    ScheduleArgs sargs;
    CLI::App* sched = app.add_subcommand(
        "schedule", "Compute, verify and print a slot schedule for one topology");
    sched->add_option("--topology", sargs.topology_path, "Topology CSV (header id,x,y)");
    sched->add_option("--nodes", sargs.nodes, "Generate a topology with this many nodes");
    sched->add_option("--side", sargs.side, "Square side for generated topologies [m]");
    sched->add_option("--seed", sargs.seed, "Seed for generation and scheduling");
    sched->add_option("--algo", sargs.algo, "Scheduling algorithm")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, stdma::Algo>{{"lgls", stdma::Algo::lgls},
                                               {"gp", stdma::Algo::gp},
                                               {"optimal", stdma::Algo::optimal}},
            CLI::ignore_case));
    sched->add_option("--ordering", sargs.ordering, "Link order for the gp algorithm")
        ->transform(CLI::CheckedTransformer(kOrderings, CLI::ignore_case));
    sched->add_option("--loads", sargs.loads_path,
                      "Per-link integer demands CSV (header link_id,demand)");
    sched->add_option("--out", sargs.out_path, "Write the schedule CSV here (default stdout)");
    sched->add_option("--links-out", sargs.links_out, "Export the link list CSV");
    sched->add_option("--dump-line-graph", sargs.line_graph_out,
                      "Export the interference/co-schedulability weights CSV");
    sched->add_flag("--deterministic", sargs.deterministic,
                    "Replace random seed-vertex choices with lowest-id choices");
    add_radio_flags(sched, sargs.radio);

    ExperimentArgs eargs;
    CLI::App* exp = app.add_subcommand(
        "experiment", "Batch schedule-length comparison over random topologies");
    exp->add_option("--nodes", eargs.node_counts, "Node counts (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    exp->add_option("--trials", eargs.trials, "Random topologies per node count");
    exp->add_option("--side", eargs.side, "Square side [m]");
    exp->add_option("--seed", eargs.seed, "Master seed");
    exp->add_option("--algo", eargs.algo_names, "Algorithms to run (lgls, gp, optimal)")
        ->delimiter(',');
    exp->add_option("--ordering", eargs.ordering, "Link order for the gp algorithm")
        ->transform(CLI::CheckedTransformer(kOrderings, CLI::ignore_case));
    exp->add_option("--workers", eargs.workers, "Concurrent trial workers");
    exp->add_option("--out", eargs.out_path, "Result CSV path (default stdout)");
    exp->add_option("--summary-out", eargs.summary_out, "Aggregate CSV path (n,algo,mean_len,std_len)");
    exp->add_flag("--no-timing", eargs.no_timing,
                  "Write runtime_ms as 0 so repeated runs are byte-identical");
    exp->add_flag("--deterministic", eargs.deterministic,
                  "Deterministic seed-vertex choice in lgls");
    add_radio_flags(exp, eargs.radio);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (sched->parsed()) return run_schedule(sargs);
        if (exp->parsed()) return run_experiment_cmd(eargs);
        return kExitInputError;
    } catch (const stdma::VerificationFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
}
