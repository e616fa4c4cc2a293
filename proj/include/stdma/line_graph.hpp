#ifndef STDMA_LINE_GRAPH_HPP
#define STDMA_LINE_GRAPH_HPP

#include <vector>

#include <Eigen/Core>

#include "stdma/topology.hpp"

namespace stdma {

/// Complete directed line graph over the communication links: one vertex
/// per link, dense e x e weight matrices (the graph is complete by
/// construction, so memory is O(e^2) by design).
///
/// w(i,j) is the interference that link i's transmission causes at link
/// j's receiver, scaled by link j's own signal there; exactly 1 when the
/// links share an endpoint node.  w_prime(i,j) = max(0, 1 - w(i,j)) scores
/// how co-schedulable i and j are (0 = never).  noise(j) is link j's noise
/// power normalized the same way.  Diagonals are unused and stored as 0;
/// no sum ever reads them.
struct LineGraph {
    Eigen::MatrixXd w;
    Eigen::MatrixXd w_prime;
    /// w_prime transposed; keeps per-row weight sums contiguous in memory
    /// during the scheduling loop (a strided row walk of a multi-MB matrix
    /// is what dominates otherwise).
    Eigen::MatrixXd w_prime_t;
    Eigen::VectorXd noise;
    std::vector<Link> links;  ///< scheduled links, indexed by vertex id

    Eigen::Index size() const { return noise.size(); }
};

/// True when the links have any endpoint node in common (shared
/// transmitter, shared receiver, relay or reversed pair alike).
bool share_endpoint(const Link& a, const Link& b);

/// 1 for links sharing an endpoint, else gamma * d(t_j,r_j)^a / d(t_i,r_j)^a.
double interference_weight(const CommGraph& g, int i, int j);

/// max(0, 1 - w_ij).
double co_schedulability(double w_ij);

/// N0 * gamma * length^a / P.  Equals 1 for a link of length exactly the
/// communication range, < 1 inside it.
double normalized_noise(const RadioParams& params, const Link& link);

LineGraph build_line_graph(const CommGraph& g);

/// Per-link positive integer demand (number of time slots required),
/// indexed by link id.  Callers normalize demands to integers beforehand.
using LoadMap = std::vector<int>;

struct ExpandedGraph {
    CommGraph graph;
    std::vector<int> physical_link;  ///< replica link id -> source link id
};

/// Replaces each link by demand-many replicas with identical endpoints and
/// fresh contiguous ids.  Replicas of one physical link share both
/// endpoints, so they get mutual weight 1 downstream and land in distinct
/// slots.
ExpandedGraph expand_loads(const CommGraph& g, const LoadMap& loads);

// Debug dump of the weight matrices, one ordered pair per row:
// header "i,j,w,w_prime".  For inspection only.
void write_line_graph_csv(std::ostream& out, const LineGraph& lg);

}  // namespace stdma

#endif  // STDMA_LINE_GRAPH_HPP
