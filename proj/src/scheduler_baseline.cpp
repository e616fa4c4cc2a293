#include "stdma/scheduler_baseline.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace stdma {

const char* to_string(GpOrdering ordering) {
    switch (ordering) {
        case GpOrdering::input: return "input";
        case GpOrdering::random: return "random";
        case GpOrdering::longest_link_first: return "longest-link-first";
        case GpOrdering::interference_degree: return "interference-degree";
    }
    return "?";
}

namespace {

std::vector<int> link_order(const CommGraph& g, GpOrdering ordering, std::uint64_t seed) {
    std::vector<int> order(g.links.size());
    std::iota(order.begin(), order.end(), 0);

    switch (ordering) {
        case GpOrdering::input:
            break;
        case GpOrdering::random: {
            std::mt19937_64 rng(seed);
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng() % i]);
            break;
        }
        case GpOrdering::longest_link_first:
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                const double la = g.links[static_cast<std::size_t>(a)].length;
                const double lb = g.links[static_cast<std::size_t>(b)].length;
                return la != lb ? la > lb : a < b;
            });
            break;
        case GpOrdering::interference_degree: {
            // potential interferers: links whose transmitter is within
            // communication range of this link's receiver
            const double range = communication_range(g.params);
            std::vector<int> degree(g.links.size(), 0);
            for (const Link& li : g.links) {
                const Vec2 rx = g.nodes[static_cast<std::size_t>(li.rx)].pos();
                for (const Link& lj : g.links) {
                    if (lj.id == li.id) continue;
                    const double d = (g.nodes[static_cast<std::size_t>(lj.tx)].pos() - rx).norm();
                    if (within_range(d, range)) ++degree[static_cast<std::size_t>(li.id)];
                }
            }
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                const int da = degree[static_cast<std::size_t>(a)];
                const int db = degree[static_cast<std::size_t>(b)];
                return da != db ? da > db : a < b;
            });
            break;
        }
    }
    return order;
}

bool shares_node_with_any(const CommGraph& g, int candidate, const std::vector<int>& members) {
    const Link& lc = g.links[static_cast<std::size_t>(candidate)];
    return std::any_of(members.begin(), members.end(), [&](int m) {
        return share_endpoint(lc, g.links[static_cast<std::size_t>(m)]);
    });
}

bool slot_feasible_with(const CommGraph& g, int candidate, const std::vector<int>& members) {
    std::vector<LinkGeometry> geom;
    geom.reserve(members.size() + 1);
    for (const int id : members) {
        const Link& link = g.links[static_cast<std::size_t>(id)];
        geom.push_back(LinkGeometry{g.nodes[static_cast<std::size_t>(link.tx)].pos(),
                                    g.nodes[static_cast<std::size_t>(link.rx)].pos()});
    }
    const Link& lc = g.links[static_cast<std::size_t>(candidate)];
    geom.push_back(LinkGeometry{g.nodes[static_cast<std::size_t>(lc.tx)].pos(),
                                g.nodes[static_cast<std::size_t>(lc.rx)].pos()});
    return sinr_feasible(g.params, geom).feasible;
}

}  // namespace

Schedule gp_schedule(const CommGraph& g, GpOrdering ordering, std::uint64_t seed) {
    Schedule s;
    s.algorithm = "gp";
    s.seed = seed;
    s.slot.assign(g.links.size(), 0);

    std::vector<std::vector<int>> slots;
    for (const int id : link_order(g, ordering, seed)) {
        bool placed = false;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (shares_node_with_any(g, id, slots[k])) continue;
            if (!slot_feasible_with(g, id, slots[k])) continue;
            slots[k].push_back(id);
            s.slot[static_cast<std::size_t>(id)] = static_cast<int>(k) + 1;
            placed = true;
            break;
        }
        if (!placed) {
            slots.push_back({id});
            s.slot[static_cast<std::size_t>(id)] = static_cast<int>(slots.size());
        }
    }
    s.num_slots = static_cast<int>(slots.size());
    return s;
}

namespace {

struct PartitionSearch {
    const CommGraph& g;
    std::vector<std::vector<int>> blocks;
    std::vector<int> best_slot;  // per link, 1-based
    int best_count;

    explicit PartitionSearch(const CommGraph& graph, int upper_bound)
        : g(graph), best_count(upper_bound) {}

    void assign(std::size_t k, std::vector<int>& slot_of) {
        const int e = static_cast<int>(g.links.size());
        if (static_cast<int>(blocks.size()) >= best_count) return;  // bound
        if (k == static_cast<std::size_t>(e)) {
            best_count = static_cast<int>(blocks.size());
            best_slot = slot_of;
            return;
        }
        const int id = static_cast<int>(k);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            // a block that turns infeasible stays infeasible for every
            // superset (interference only accumulates), so prune here
            if (shares_node_with_any(g, id, blocks[b])) continue;
            if (!slot_feasible_with(g, id, blocks[b])) continue;
            blocks[b].push_back(id);
            slot_of[k] = static_cast<int>(b) + 1;
            assign(k + 1, slot_of);
            blocks[b].pop_back();
        }
        if (static_cast<int>(blocks.size()) + 1 < best_count) {
            blocks.push_back({id});
            slot_of[k] = static_cast<int>(blocks.size());
            assign(k + 1, slot_of);
            blocks.pop_back();
        }
    }
};

}  // namespace

Schedule optimal_schedule(const CommGraph& g) {
    const int e = static_cast<int>(g.links.size());
    if (e > kOptimalLinkCap)
        throw std::invalid_argument("optimal_schedule: instance has " + std::to_string(e) +
                                    " links, above the cap of " +
                                    std::to_string(kOptimalLinkCap));
    Schedule s;
    s.algorithm = "optimal";
    s.slot.assign(static_cast<std::size_t>(e), 0);
    if (e == 0) return s;

    // one-link-per-slot is always a valid partition, so it bounds the search
    PartitionSearch search(g, e + 1);
    std::vector<int> slot_of(static_cast<std::size_t>(e), 0);
    search.assign(0, slot_of);

    s.slot = search.best_slot;
    s.num_slots = search.best_count;
    return s;
}

}  // namespace stdma
