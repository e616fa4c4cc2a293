#include "stdma/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>
#include <thread>

namespace stdma {

const char* to_string(Algo algo) {
    switch (algo) {
        case Algo::gp: return "gp";
        case Algo::lgls: return "lgls";
        case Algo::optimal: return "optimal";
    }
    return "?";
}

bool algo_from_string(const std::string& name, Algo& out) {
    if (name == "gp") out = Algo::gp;
    else if (name == "lgls") out = Algo::lgls;
    else if (name == "optimal") out = Algo::optimal;
    else return false;
    return true;
}

RadioParams ingest_params(double power_mw, double noise_dbm, double gamma_db, double alpha) {
    return RadioParams(power_mw, dbm_to_mw(noise_dbm), alpha, db_to_linear(gamma_db));
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial) {
    std::uint64_t s = mix64(master_seed);
    s = mix64(s ^ mix64(static_cast<std::uint64_t>(n)));
    s = mix64(s ^ mix64(static_cast<std::uint64_t>(trial)));
    return s;
}

std::uint64_t algo_seed(std::uint64_t tseed, Algo algo) {
    return mix64(tseed ^ mix64(0x100u + static_cast<std::uint64_t>(algo)));
}

namespace {

void append_fixed(std::string& out, double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    out += buf;
}

std::string_view trim_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Schedule run_algo(const CommGraph& g, Algo algo, const ExperimentConfig& cfg,
                  std::uint64_t tseed, double& out_ms) {
    const auto t0 = std::chrono::steady_clock::now();
    Schedule sched;
    switch (algo) {
        case Algo::lgls: {
            const LineGraph lg = build_line_graph(g);
            sched = lgls_schedule(lg, algo_seed(tseed, algo), cfg.deterministic);
            break;
        }
        case Algo::gp:
            sched = gp_schedule(g, cfg.gp_ordering, algo_seed(tseed, algo));
            break;
        case Algo::optimal:
            sched = optimal_schedule(g);
            break;
    }
    out_ms = elapsed_ms(t0);
    return sched;
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.node_counts.empty())
        throw std::invalid_argument("experiment: node_counts must be non-empty");
    for (const int n : cfg.node_counts)
        if (n < 1) throw std::invalid_argument("experiment: node counts must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("experiment: workers must be >= 1");
    if (cfg.algorithms.empty())
        throw std::invalid_argument("experiment: at least one algorithm required");
}

std::string failed_topology_path(const ExperimentConfig& cfg, int n, int trial) {
    std::string base = cfg.out_path.empty() ? "failed_topology" : cfg.out_path + ".failed_topology";
    return base + "_n" + std::to_string(n) + "_t" + std::to_string(trial) + ".csv";
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const RadioParams params = ingest_params(cfg.power_mw, cfg.noise_dbm, cfg.gamma_db, cfg.alpha);

    struct Task {
        int n;
        int trial;
    };
    std::vector<Task> tasks;
    tasks.reserve(cfg.node_counts.size() * static_cast<std::size_t>(cfg.trials));
    for (const int n : cfg.node_counts)
        for (int t = 0; t < cfg.trials; ++t) tasks.push_back(Task{n, t});

    std::vector<std::vector<ResultRow>> task_rows(tasks.size());
    std::vector<std::exception_ptr> task_errors(tasks.size());

    auto run_task = [&](std::size_t idx) {
        const Task& task = tasks[idx];
        const std::uint64_t tseed = trial_seed(cfg.master_seed, task.n, task.trial);
        const CommGraph g = build_comm_graph(generate_topology(task.n, cfg.side, tseed), params);

        for (const Algo algo : cfg.algorithms) {
            double ms = 0.0;
            const Schedule sched = run_algo(g, algo, cfg, tseed, ms);
            const auto reports = verify_schedule(g, sched);
            if (!all_slots_feasible(reports)) {
                const std::string path = failed_topology_path(cfg, task.n, task.trial);
                save_topology(g.nodes, path);
                throw VerificationFailure(
                    std::string("schedule failed SINR verification: algo=") + to_string(algo) +
                    " n=" + std::to_string(task.n) + " trial=" + std::to_string(task.trial) +
                    " seed=" + std::to_string(tseed) + "; topology saved to " + path);
            }
            task_rows[idx].push_back(ResultRow{task.n, task.trial, algo,
                                               static_cast<int>(g.links.size()), sched.num_slots,
                                               cfg.timing ? ms : 0.0, true});
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    run_task(i);
                } catch (...) {
                    task_errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& err : task_errors)
            if (err) std::rethrow_exception(err);
    }

    ExperimentResult result;
    for (auto& rows : task_rows)
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    std::sort(result.rows.begin(), result.rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.trial != b.trial) return a.trial < b.trial;
        return std::string_view(to_string(a.algo)) < std::string_view(to_string(b.algo));
    });

    // per-(n, algo) mean and sample standard deviation of schedule length
    for (const int n : cfg.node_counts) {
        std::vector<Algo> algos = cfg.algorithms;
        std::sort(algos.begin(), algos.end(), [](Algo a, Algo b) {
            return std::string_view(to_string(a)) < std::string_view(to_string(b));
        });
        for (const Algo algo : algos) {
            double sum = 0.0;
            int count = 0;
            for (const ResultRow& row : result.rows)
                if (row.n == n && row.algo == algo) {
                    sum += row.schedule_length;
                    ++count;
                }
            const double mean = sum / count;
            double sq = 0.0;
            for (const ResultRow& row : result.rows)
                if (row.n == n && row.algo == algo)
                    sq += (row.schedule_length - mean) * (row.schedule_length - mean);
            const double stddev = count > 1 ? std::sqrt(sq / (count - 1)) : 0.0;
            result.summary.push_back(SummaryRow{n, algo, count, mean, stddev});
        }
    }

    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::runtime_error("cannot write results to '" + cfg.out_path + "'");
        out << results_csv(result.rows);
    }
    return result;
}

std::string results_csv(const std::vector<ResultRow>& rows) {
    std::string out = "n,trial,algo,links,schedule_length,runtime_ms,verified\n";
    for (const ResultRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.trial);
        out += ',';
        out += to_string(row.algo);
        out += ',';
        out += std::to_string(row.links);
        out += ',';
        out += std::to_string(row.schedule_length);
        out += ',';
        append_fixed(out, row.runtime_ms, 3);
        out += ',';
        out += row.verified ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out = "n,algo,mean_len,std_len\n";
    for (const SummaryRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += to_string(row.algo);
        out += ',';
        append_fixed(out, row.mean_len, 6);
        out += ',';
        append_fixed(out, row.std_len, 6);
        out += '\n';
    }
    return out;
}

std::string summary_table(const std::vector<SummaryRow>& rows) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%8s %-8s %8s %12s %12s\n", "n", "algo", "trials",
                  "mean_len", "std_len");
    out += buf;
    for (const SummaryRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%8d %-8s %8d %12.3f %12.3f\n", row.n,
                      to_string(row.algo), row.trials, row.mean_len, row.std_len);
        out += buf;
    }
    return out;
}

ScheduleJobResult run_schedule_job(const CommGraph& g, const ScheduleJob& job) {
    ScheduleJobResult res{g, {}, {}, {}, false};
    res.physical_link.resize(g.links.size());
    for (std::size_t i = 0; i < g.links.size(); ++i)
        res.physical_link[i] = static_cast<int>(i);

    if (job.loads) {
        ExpandedGraph expanded = expand_loads(g, *job.loads);
        res.graph = std::move(expanded.graph);
        res.physical_link = std::move(expanded.physical_link);
    }

    switch (job.algo) {
        case Algo::lgls:
            res.schedule = lgls_schedule(build_line_graph(res.graph), job.seed, job.deterministic);
            break;
        case Algo::gp:
            res.schedule = gp_schedule(res.graph, job.ordering, job.seed);
            break;
        case Algo::optimal:
            res.schedule = optimal_schedule(res.graph);
            break;
    }
    res.reports = verify_schedule(res.graph, res.schedule);
    res.feasible = all_slots_feasible(res.reports);
    return res;
}

std::string format_slot_reports(const Schedule& s, const std::vector<SinrReport>& reports,
                                double gamma_lin) {
    const auto classes = slot_classes(s);
    std::string out;
    char buf[256];
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const SinrReport& r = reports[k];
        const double min_sinr = r.sinr.size() > 0 ? r.sinr.minCoeff() : 0.0;
        std::string members;
        for (const int id : classes[k]) {
            if (!members.empty()) members += ' ';
            members += std::to_string(id);
        }
        std::snprintf(buf, sizeof(buf),
                      "slot %zu: links [%s] min_sinr=%.6g threshold=%.6g margin=%.6g %s\n", k + 1,
                      members.c_str(), min_sinr, gamma_lin, r.min_margin,
                      r.feasible ? "ok" : "INFEASIBLE");
        out += buf;
    }
    return out;
}

LoadMap read_loads_csv(std::istream& in, std::size_t link_count) {
    std::string line;
    if (!std::getline(in, line) || trim_cr(line) != "link_id,demand")
        throw ParseError("expected loads header 'link_id,demand'", 1);

    LoadMap loads(link_count, 0);
    std::vector<char> seen(link_count, 0);
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim_cr(line);
        if (body.empty()) continue;
        const std::size_t comma = body.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("expected 2 fields 'link_id,demand'", line_no);
        int id = 0;
        int demand = 0;
        const std::string_view f0 = body.substr(0, comma);
        const std::string_view f1 = body.substr(comma + 1);
        auto r0 = std::from_chars(f0.data(), f0.data() + f0.size(), id);
        auto r1 = std::from_chars(f1.data(), f1.data() + f1.size(), demand);
        if (r0.ec != std::errc{} || r0.ptr != f0.data() + f0.size() || r1.ec != std::errc{} ||
            r1.ptr != f1.data() + f1.size())
            throw ParseError("expected integers 'link_id,demand'", line_no);
        if (id < 0 || static_cast<std::size_t>(id) >= link_count)
            throw ParseError("link_id " + std::to_string(id) + " out of range", line_no);
        if (seen[static_cast<std::size_t>(id)])
            throw ParseError("duplicate link_id " + std::to_string(id), line_no);
        if (demand < 1)
            throw ParseError("demand must be >= 1", line_no);
        seen[static_cast<std::size_t>(id)] = 1;
        loads[static_cast<std::size_t>(id)] = demand;
    }
    for (std::size_t i = 0; i < link_count; ++i)
        if (!seen[i])
            throw ParseError("missing demand for link " + std::to_string(i),
                             line_no + 1);
    return loads;
}

LoadMap load_loads(const std::string& path, std::size_t link_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open loads file '" + path + "'", 0);
    return read_loads_csv(in, link_count);
}

}  // namespace stdma
