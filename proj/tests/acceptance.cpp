// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass.  Run via ctest (-R acceptance) or directly from the build tree.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stdma/experiment.hpp"

using namespace stdma;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

RadioParams default_params() { return ingest_params(1000.0, -96.0, 7.0, 4.5); }

std::vector<LinkGeometry> geometry_of(const CommGraph& g, const std::vector<int>& ids) {
    std::vector<LinkGeometry> geom;
    geom.reserve(ids.size());
    for (const int id : ids) {
        const Link& link = g.links[static_cast<std::size_t>(id)];
        geom.push_back(LinkGeometry{g.nodes[static_cast<std::size_t>(link.tx)].pos(),
                                    g.nodes[static_cast<std::size_t>(link.rx)].pos()});
    }
    return geom;
}

// ---------------------------------------------------------------------------
// 1. Safety: 100 random 50-node topologies, every LGLS schedule passes the
//    SINR oracle on every slot and never co-slots links sharing a node.
Outcome criterion_safety() {
    const RadioParams params = default_params();
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t tseed = trial_seed(1234, 50, t);
        const CommGraph g = build_comm_graph(generate_topology(50, 3000.0, tseed), params);
        const LineGraph lg = build_line_graph(g);
        const Schedule s = lgls_schedule(lg, algo_seed(tseed, Algo::lgls));

        if (!all_slots_feasible(verify_schedule(g, s)))
            return {false, fmt("trial %d: a slot failed SINR verification", t)};
        for (const auto& cls : slot_classes(s))
            for (std::size_t a = 0; a < cls.size(); ++a)
                for (std::size_t b = a + 1; b < cls.size(); ++b)
                    if (share_endpoint(g.links[static_cast<std::size_t>(cls[a])],
                                       g.links[static_cast<std::size_t>(cls[b])]))
                        return {false, fmt("trial %d: links sharing a node co-slotted", t)};
        ++ok;
    }
    return {true, fmt("%d/100 schedules feasible, half-duplex respected", ok)};
}

// ---------------------------------------------------------------------------
// 2. Weight-criterion/oracle equivalence on >= 10000 random subsets of
//    pairwise non-adjacent links with all pairwise w < 1: the weight-space
//    test must equal strict per-receiver SINR > gamma, with zero mismatches.
Outcome criterion_equivalence() {
    const RadioParams params = default_params();
    long accepted = 0;
    long feasible_count = 0;
    long infeasible_count = 0;

    const double sides[] = {3000.0, 1600.0, 1000.0};
    std::uint64_t topo_seed = 0;
    std::mt19937_64 rng(20240817);

    while (accepted < 10000) {
        const double side = sides[topo_seed % 3];
        const CommGraph g =
            build_comm_graph(generate_topology(50, side, mix64(++topo_seed)), params);
        const LineGraph lg = build_line_graph(g);
        const int e = static_cast<int>(g.links.size());
        if (e < 8) continue;

        for (int draw = 0; draw < 1200 && accepted < 10000; ++draw) {
            const int want = 2 + static_cast<int>(rng() % 4);
            std::set<int> pick;
            if (draw % 2 == 0) {
                while (static_cast<int>(pick.size()) < want)
                    pick.insert(static_cast<int>(rng() % static_cast<std::uint64_t>(e)));
            } else {
                // local draw: anchor plus links whose transmitters sit close
                // to the anchor's receiver, which lands near the w < 1 edge
                const int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(e));
                const Vec2 rx = g.nodes[static_cast<std::size_t>(
                                            g.links[static_cast<std::size_t>(anchor)].rx)]
                                    .pos();
                std::vector<std::pair<double, int>> by_dist;
                for (const Link& link : g.links) {
                    if (link.id == anchor) continue;
                    by_dist.emplace_back(
                        (g.nodes[static_cast<std::size_t>(link.tx)].pos() - rx).norm(),
                        link.id);
                }
                std::sort(by_dist.begin(), by_dist.end());
                pick.insert(anchor);
                const std::size_t pool = std::min<std::size_t>(by_dist.size(), 25);
                while (static_cast<int>(pick.size()) < want && pool > 0)
                    pick.insert(by_dist[rng() % pool].second);
            }
            if (static_cast<int>(pick.size()) != want) continue;

            const std::vector<int> subset(pick.begin(), pick.end());
            bool clean = true;
            for (std::size_t a = 0; a < subset.size() && clean; ++a)
                for (std::size_t b = 0; b < subset.size() && clean; ++b) {
                    if (a == b) continue;
                    const Link& la = g.links[static_cast<std::size_t>(subset[a])];
                    const Link& lb = g.links[static_cast<std::size_t>(subset[b])];
                    if (share_endpoint(la, lb) || lg.w(subset[a], subset[b]) >= 1.0)
                        clean = false;
                }
            if (!clean) continue;

            ++accepted;
            const bool by_weights = feasible_by_weights(lg, subset);
            const auto report = sinr_feasible(params, geometry_of(g, subset));
            const bool strict_sinr = (report.sinr.array() > params.gamma_lin).all();
            if (by_weights != strict_sinr)
                return {false, fmt("mismatch after %ld subsets: weights=%d oracle=%d size=%zu",
                                   accepted, int(by_weights), int(strict_sinr), subset.size())};
            (strict_sinr ? feasible_count : infeasible_count)++;
        }
    }
    return {true, fmt("%ld subsets, 0 mismatches (%ld feasible, %ld infeasible)", accepted,
                      feasible_count, infeasible_count)};
}

// ---------------------------------------------------------------------------
// 3. Schedule-length gap versus the greedy baseline on paired topologies:
//    mean LGLS <= 0.6 * mean GP at every N, reduction non-decreasing in N.
Outcome criterion_gap() {
    ExperimentConfig cfg;
    cfg.node_counts = {25, 50, 75, 100};
    cfg.trials = 60;
    cfg.algorithms = {Algo::lgls, Algo::gp};
    cfg.master_seed = 777;
    cfg.workers = 4;
    cfg.timing = false;

    const ExperimentResult res = run_experiment(cfg);
    std::string detail;
    double prev_reduction = -1.0;
    for (const int n : cfg.node_counts) {
        double lgls_mean = 0.0;
        double gp_mean = 0.0;
        for (const SummaryRow& row : res.summary) {
            if (row.n != n) continue;
            if (row.algo == Algo::lgls) lgls_mean = row.mean_len;
            if (row.algo == Algo::gp) gp_mean = row.mean_len;
        }
        const double ratio = lgls_mean / gp_mean;
        const double reduction = 1.0 - ratio;
        detail += fmt("N=%d lgls=%.2f gp=%.2f red=%.0f%%  ", n, lgls_mean, gp_mean,
                      100.0 * reduction);
        if (!(lgls_mean <= 0.6 * gp_mean))
            return {false, detail + fmt("-> ratio %.3f above 0.6 at N=%d", ratio, n)};
        if (reduction < prev_reduction)
            return {false, detail + fmt("-> reduction shrank at N=%d", n)};
        prev_reduction = reduction;
    }
    return {true, detail};
}

// ---------------------------------------------------------------------------
// 4. Exhaustive lower bound on 500 tiny instances: optimal <= LGLS <= e.
Outcome criterion_optimal_bound() {
    const RadioParams params = default_params();
    int instances = 0;
    double ratio_sum = 0.0;
    for (std::uint64_t seed = 1; instances < 500; ++seed) {
        const CommGraph g = build_comm_graph(generate_topology(8, 3000.0, mix64(seed)), params);
        const int e = static_cast<int>(g.links.size());
        if (e < 1 || e > 8) continue;
        ++instances;

        const Schedule best = optimal_schedule(g);
        const Schedule lgls = lgls_schedule(build_line_graph(g), seed);
        if (best.num_slots > lgls.num_slots)
            return {false, fmt("instance %d: optimal %d > lgls %d", instances, best.num_slots,
                               lgls.num_slots)};
        if (lgls.num_slots > e)
            return {false, fmt("instance %d: lgls %d exceeds link count %d", instances,
                               lgls.num_slots, e)};
        ratio_sum += static_cast<double>(lgls.num_slots) / best.num_slots;
    }
    return {true, fmt("500 instances, 0 violations, mean lgls/optimal = %.4f",
                      ratio_sum / instances)};
}

// ---------------------------------------------------------------------------
// 5. Non-uniform demands in [1, 5]: every physical link occupies exactly its
//    demanded number of distinct slots and the expanded schedule verifies.
Outcome criterion_loads() {
    const RadioParams params = default_params();
    for (int t = 0; t < 20; ++t) {
        const std::uint64_t tseed = trial_seed(5150, 30, t);
        const CommGraph g = build_comm_graph(generate_topology(30, 3000.0, tseed), params);
        std::mt19937_64 rng(mix64(tseed ^ 0xABCD));
        LoadMap loads(g.links.size());
        for (auto& demand : loads) demand = 1 + static_cast<int>(rng() % 5);

        const ExpandedGraph expanded = expand_loads(g, loads);
        const Schedule s = lgls_schedule(build_line_graph(expanded.graph), tseed);

        if (!all_slots_feasible(verify_schedule(expanded.graph, s)))
            return {false, fmt("trial %d: expanded schedule failed verification", t)};

        std::vector<std::set<int>> slots_of(g.links.size());
        for (std::size_t i = 0; i < expanded.graph.links.size(); ++i)
            slots_of[static_cast<std::size_t>(expanded.physical_link[i])].insert(
                s.slot[i]);
        for (std::size_t id = 0; id < loads.size(); ++id)
            if (static_cast<int>(slots_of[id].size()) != loads[id])
                return {false, fmt("trial %d: link %zu demanded %d slots, got %zu", t, id,
                                   loads[id], slots_of[id].size())};
    }
    return {true, "20 topologies, demands in [1,5], 0 violations"};
}

// ---------------------------------------------------------------------------
// 6. Coloring-loop scaling: as the link count doubles (~4 times), the
//    scheduling-loop wall time may grow by at most ~5x per doubling.
//    Sizes are chosen so the weight matrices stay cache-resident across the
//    whole ladder; larger ladders measure the LLC-to-DRAM boundary instead
//    of the loop's operation count.
Outcome criterion_scaling() {
    const RadioParams params = default_params();
    const int node_counts[] = {27, 38, 54, 76, 107};
    std::vector<double> median_ms;
    std::vector<double> mean_links;

    for (const int n : node_counts) {
        std::vector<double> per_seed_ms;
        double links_sum = 0.0;
        for (int rep = 0; rep < 5; ++rep) {
            const std::uint64_t tseed = trial_seed(31337, n, rep);
            const CommGraph g = build_comm_graph(generate_topology(n, 3000.0, tseed), params);
            const LineGraph lg = build_line_graph(g);
            links_sum += static_cast<double>(g.links.size());

            // repeat until the sample is long enough to time reliably
            int calls = 0;
            const auto t0 = std::chrono::steady_clock::now();
            double elapsed = 0.0;
            do {
                volatile int sink =
                    lgls_schedule(lg, mix64(tseed + static_cast<std::uint64_t>(calls)))
                        .num_slots;
                (void)sink;
                ++calls;
                elapsed = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            } while (elapsed < 40.0 || calls < 3);
            per_seed_ms.push_back(elapsed / calls);
        }
        std::sort(per_seed_ms.begin(), per_seed_ms.end());
        median_ms.push_back(per_seed_ms[per_seed_ms.size() / 2]);
        mean_links.push_back(links_sum / 5.0);
    }

    std::string detail;
    for (std::size_t k = 0; k < median_ms.size(); ++k)
        detail += fmt("e=%.0f t=%.3fms  ", mean_links[k], median_ms[k]);
    for (std::size_t k = 0; k + 1 < median_ms.size(); ++k) {
        const double e_ratio = mean_links[k + 1] / mean_links[k];
        const double t_ratio = median_ms[k + 1] / median_ms[k];
        if (e_ratio < 1.5 || e_ratio > 2.7)
            return {false, detail + fmt("-> link count did not roughly double (%.2fx)", e_ratio)};
        if (t_ratio > 5.0)
            return {false,
                    detail + fmt("-> time grew %.2fx over a %.2fx link doubling", t_ratio, e_ratio)};
        detail += fmt("[x%.2f links -> x%.2f time] ", e_ratio, t_ratio);
    }
    return {true, detail};
}

// ---------------------------------------------------------------------------
// 7. Determinism: identical configs and master seed give byte-identical
//    result CSVs (timing disabled; timings themselves never replay).
Outcome criterion_determinism() {
    ExperimentConfig cfg;
    cfg.node_counts = {25, 40};
    cfg.trials = 5;
    cfg.algorithms = {Algo::lgls, Algo::gp};
    cfg.master_seed = 42;
    cfg.workers = 3;
    cfg.timing = false;

    const ExperimentResult a = run_experiment(cfg);
    const ExperimentResult b = run_experiment(cfg);
    if (results_csv(a.rows) != results_csv(b.rows))
        return {false, "result CSVs differ between identical runs"};
    if (summary_csv(a.summary) != summary_csv(b.summary))
        return {false, "summary CSVs differ between identical runs"};

    // with timing on, everything except the runtime column must still agree
    cfg.timing = true;
    const ExperimentResult c = run_experiment(cfg);
    const ExperimentResult d = run_experiment(cfg);
    if (c.rows.size() != d.rows.size()) return {false, "row counts differ with timing on"};
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        const ResultRow& x = c.rows[i];
        const ResultRow& y = d.rows[i];
        if (x.n != y.n || x.trial != y.trial || x.algo != y.algo || x.links != y.links ||
            x.schedule_length != y.schedule_length || x.verified != y.verified)
            return {false, fmt("row %zu differs with timing on", i)};
    }
    return {true, "byte-identical CSVs (timing off); schedule content identical (timing on)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1-safety", criterion_safety},
        {"2-equivalence", criterion_equivalence},
        {"3-baseline-gap", criterion_gap},
        {"4-optimal-bound", criterion_optimal_bound},
        {"5-nonuniform-load", criterion_loads},
        {"6-loop-scaling", criterion_scaling},
        {"7-determinism", criterion_determinism},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome outcome{};
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %-18s %s\n", outcome.pass ? "PASS" : "FAIL", name,
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
