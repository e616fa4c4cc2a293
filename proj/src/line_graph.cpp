#include "stdma/line_graph.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

namespace stdma {

bool share_endpoint(const Link& a, const Link& b) {
    return a.tx == b.tx || a.tx == b.rx || a.rx == b.tx || a.rx == b.rx;
}

namespace {

double cross_distance(const CommGraph& g, const Link& from, const Link& to) {
    // transmitter of `from` to receiver of `to`
    const double d = distance(g.nodes[static_cast<std::size_t>(from.tx)],
                              g.nodes[static_cast<std::size_t>(to.rx)]);
    if (!(d > 0.0))
        throw DegenerateGeometryError("line graph: transmitter of link " +
                                      std::to_string(from.id) + " coincides with receiver of link " +
                                      std::to_string(to.id));
    return d;
}

double weight_of(const CommGraph& g, const Link& li, const Link& lj) {
    if (share_endpoint(li, lj)) return 1.0;
    const double dij = cross_distance(g, li, lj);
    return g.params.gamma_lin * std::pow(lj.length, g.params.alpha) /
           std::pow(dij, g.params.alpha);
}

}  // namespace

double interference_weight(const CommGraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("interference_weight: i and j must differ");
    return weight_of(g, g.links[static_cast<std::size_t>(i)],
                     g.links[static_cast<std::size_t>(j)]);
}

double co_schedulability(double w_ij) { return std::max(0.0, 1.0 - w_ij); }

double normalized_noise(const RadioParams& params, const Link& link) {
    if (!(link.length > 0.0))
        throw DegenerateGeometryError("normalized_noise: link length must be > 0");
    return params.noise_mw * params.gamma_lin * std::pow(link.length, params.alpha) /
           params.power_mw;
}

LineGraph build_line_graph(const CommGraph& g) {
    const auto e = static_cast<Eigen::Index>(g.links.size());
    LineGraph lg;
    lg.w = Eigen::MatrixXd::Zero(e, e);
    lg.w_prime = Eigen::MatrixXd::Zero(e, e);
    lg.noise.resize(e);
    lg.links = g.links;

    // hoist the per-link length^alpha out of the e^2 loop
    Eigen::VectorXd len_alpha(e);
    for (Eigen::Index j = 0; j < e; ++j) {
        const Link& lj = g.links[static_cast<std::size_t>(j)];
        if (!(lj.length > 0.0))
            throw DegenerateGeometryError("line graph: link length must be > 0");
        len_alpha[j] = std::pow(lj.length, g.params.alpha);
        lg.noise[j] = g.params.noise_mw * g.params.gamma_lin * len_alpha[j] / g.params.power_mw;
    }

    for (Eigen::Index j = 0; j < e; ++j) {
        const Link& lj = g.links[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < e; ++i) {
            if (i == j) continue;  // diagonal stays 0, never read
            const Link& li = g.links[static_cast<std::size_t>(i)];
            double w;
            if (share_endpoint(li, lj)) {
                w = 1.0;
            } else {
                const double dij = cross_distance(g, li, lj);
                w = g.params.gamma_lin * len_alpha[j] / std::pow(dij, g.params.alpha);
            }
            lg.w(i, j) = w;
            lg.w_prime(i, j) = co_schedulability(w);
        }
    }
    lg.w_prime_t = lg.w_prime.transpose();
    return lg;
}

void write_line_graph_csv(std::ostream& out, const LineGraph& lg) {
    std::string buf = "i,j,w,w_prime\n";
    char num[32];
    auto append_double = [&buf, &num](double v) {
        const auto res = std::to_chars(num, num + sizeof(num), v);
        buf.append(num, res.ptr);
    };
    for (Eigen::Index i = 0; i < lg.size(); ++i) {
        for (Eigen::Index j = 0; j < lg.size(); ++j) {
            if (i == j) continue;
            buf += std::to_string(i);
            buf += ',';
            buf += std::to_string(j);
            buf += ',';
            append_double(lg.w(i, j));
            buf += ',';
            append_double(lg.w_prime(i, j));
            buf += '\n';
        }
    }
    out << buf;
}

ExpandedGraph expand_loads(const CommGraph& g, const LoadMap& loads) {
    if (loads.size() != g.links.size())
        throw std::invalid_argument("expand_loads: loads must cover every link");
    for (std::size_t i = 0; i < loads.size(); ++i)
        if (loads[i] < 1)
            throw std::invalid_argument("expand_loads: demand for link " + std::to_string(i) +
                                        " must be >= 1");

    ExpandedGraph out{CommGraph{g.nodes, {}, g.params}, {}};
    const auto total = std::accumulate(loads.begin(), loads.end(), std::size_t{0});
    out.graph.links.reserve(total);
    out.physical_link.reserve(total);
    int next_id = 0;
    for (const Link& link : g.links) {
        const int demand = loads[static_cast<std::size_t>(link.id)];
        for (int r = 0; r < demand; ++r) {
            out.graph.links.push_back(Link{next_id++, link.tx, link.rx, link.length});
            out.physical_link.push_back(link.id);
        }
    }
    return out;
}

}  // namespace stdma
