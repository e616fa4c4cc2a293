#include "stdma/scheduler_lgls.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace stdma {

namespace {

// k-th lowest uncolored vertex id; container-order independent, so the
// random choice is reproducible regardless of bookkeeping layout.
Eigen::Index nth_uncolored(const std::vector<char>& uncolored, Eigen::Index k) {
    for (Eigen::Index id = 0; id < static_cast<Eigen::Index>(uncolored.size()); ++id) {
        if (!uncolored[static_cast<std::size_t>(id)]) continue;
        if (k == 0) return id;
        --k;
    }
    return -1;  // unreachable while count > 0
}

}  // namespace

Schedule lgls_schedule(const LineGraph& lg, std::uint64_t seed, bool deterministic) {
    const Eigen::Index e = lg.size();
    Schedule s;
    s.algorithm = "lgls";
    s.seed = seed;
    s.slot.assign(static_cast<std::size_t>(e), 0);
    if (e == 0) return s;  // empty graph -> empty schedule

    std::mt19937_64 rng(seed);
    std::vector<char> uncolored(static_cast<std::size_t>(e), 1);
    Eigen::Index num_uncolored = e;

    // Running sums, refreshed per color class:
    //   sum_in[y]  = sum over class members x of w'(x -> y)
    //   sum_out[y] = sum over class members x of w'(y -> x)
    //   inc[v]     = for a member v, sum over other members of w'(-> v)
    // Updating them on each admission keeps the candidate scan O(e) and the
    // admission test O(|class|).
    Eigen::VectorXd sum_in(e);
    Eigen::VectorXd sum_out(e);
    std::vector<double> inc(static_cast<std::size_t>(e), 0.0);
    std::vector<int> members;

    int p = 0;
    while (num_uncolored > 0) {
        ++p;

        Eigen::Index k = 0;
        if (!deterministic && num_uncolored > 1)
            k = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(num_uncolored));
        const Eigen::Index seed_vertex = nth_uncolored(uncolored, k);

        s.slot[static_cast<std::size_t>(seed_vertex)] = p;
        uncolored[static_cast<std::size_t>(seed_vertex)] = 0;
        --num_uncolored;
        members.assign(1, static_cast<int>(seed_vertex));
        inc[static_cast<std::size_t>(seed_vertex)] = 0.0;
        sum_in = lg.w_prime_t.col(seed_vertex);
        sum_out = lg.w_prime.col(seed_vertex);

        bool open = true;
        while (open && num_uncolored > 0) {
            // Uncolored vertex with the largest weight sum to/from the
            // class; ties go to the lowest id.
            Eigen::Index best = -1;
            double best_sum = -1.0;
            for (Eigen::Index y = 0; y < e; ++y) {
                if (!uncolored[static_cast<std::size_t>(y)]) continue;
                const double sum = sum_in[y] + sum_out[y];
                if (sum > best_sum) {
                    best_sum = sum;
                    best = y;
                }
            }
            const Eigen::Index u = best;
            const double class_size = static_cast<double>(members.size());

            // Every current member must keep its incoming-weight sum above
            // |class| + noise - 1 once u joins; then u itself must clear
            // the same bar.  Comparisons are strict on raw doubles:
            // rounding can only make admission more conservative.
            for (const int vc : members) {
                const double lhs =
                    inc[static_cast<std::size_t>(vc)] + lg.w_prime(u, static_cast<Eigen::Index>(vc));
                if (!(lhs > class_size + lg.noise[static_cast<Eigen::Index>(vc)] - 1.0)) {
                    open = false;
                    break;
                }
            }
            if (open && sum_in[u] > class_size + lg.noise[u] - 1.0) {
                s.slot[static_cast<std::size_t>(u)] = p;
                uncolored[static_cast<std::size_t>(u)] = 0;
                --num_uncolored;
                for (const int vc : members)
                    inc[static_cast<std::size_t>(vc)] += lg.w_prime(u, static_cast<Eigen::Index>(vc));
                inc[static_cast<std::size_t>(u)] = sum_in[u];
                members.push_back(static_cast<int>(u));
                sum_in += lg.w_prime_t.col(u);
                sum_out += lg.w_prime.col(u);
            } else {
                open = false;
            }
        }
    }
    s.num_slots = p;
    return s;
}

bool feasible_by_weights(const LineGraph& lg, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("feasible_by_weights: subset must be non-empty");
    const double size = static_cast<double>(subset.size());
    for (const int v1 : subset) {
        double incoming = 0.0;
        for (const int v2 : subset) {
            if (v2 == v1) continue;
            incoming += lg.w_prime(static_cast<Eigen::Index>(v2), static_cast<Eigen::Index>(v1));
        }
        if (!(incoming > size + lg.noise[static_cast<Eigen::Index>(v1)] - 2.0)) return false;
    }
    return true;
}

std::vector<std::vector<int>> slot_classes(const Schedule& s) {
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(s.num_slots));
    for (std::size_t id = 0; id < s.slot.size(); ++id) {
        const int slot = s.slot[id];
        if (slot < 1 || slot > s.num_slots)
            throw std::invalid_argument("slot_classes: slot index out of range");
        classes[static_cast<std::size_t>(slot - 1)].push_back(static_cast<int>(id));
    }
    return classes;
}

std::vector<SinrReport> verify_schedule(const CommGraph& g, const Schedule& s) {
    if (s.slot.size() != g.links.size())
        throw std::invalid_argument("verify_schedule: schedule does not cover the graph's links");
    const auto classes = slot_classes(s);
    for (const auto& cls : classes)
        if (cls.empty())
            throw std::invalid_argument("verify_schedule: slot indices must be contiguous 1..C");

    std::vector<SinrReport> reports;
    reports.reserve(classes.size());
    for (const auto& cls : classes) {
        std::vector<LinkGeometry> geom;
        geom.reserve(cls.size());
        for (const int id : cls) {
            const Link& link = g.links[static_cast<std::size_t>(id)];
            geom.push_back(LinkGeometry{g.nodes[static_cast<std::size_t>(link.tx)].pos(),
                                        g.nodes[static_cast<std::size_t>(link.rx)].pos()});
        }
        reports.push_back(sinr_feasible(g.params, geom));
    }
    return reports;
}

bool all_slots_feasible(const std::vector<SinrReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const SinrReport& r) { return r.feasible; });
}

std::string schedule_csv(const CommGraph& g, const Schedule& s, const std::vector<int>* physical) {
    if (s.slot.size() != g.links.size())
        throw std::invalid_argument("schedule_csv: schedule does not cover the graph's links");
    const bool tag_column = s.algorithm != "lgls";
    std::string out = "link_id,tx,rx,slot";
    if (tag_column) out += ",algo";
    out += '\n';
    for (const Link& link : g.links) {
        const int id = physical ? (*physical)[static_cast<std::size_t>(link.id)] : link.id;
        out += std::to_string(id);
        out += ',';
        out += std::to_string(link.tx);
        out += ',';
        out += std::to_string(link.rx);
        out += ',';
        out += std::to_string(s.slot[static_cast<std::size_t>(link.id)]);
        if (tag_column) {
            out += ',';
            out += s.algorithm;
        }
        out += '\n';
    }
    return out;
}

}  // namespace stdma
