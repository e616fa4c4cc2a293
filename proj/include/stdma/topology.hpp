#ifndef STDMA_TOPOLOGY_HPP
#define STDMA_TOPOLOGY_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdma/radio_model.hpp"

namespace stdma {

struct Node {
    int id;
    double x;  ///< meters
    double y;  ///< meters

    Vec2 pos() const { return Vec2(x, y); }
};

bool operator==(const Node& a, const Node& b);

inline double distance(const Node& a, const Node& b) { return (a.pos() - b.pos()).norm(); }

/// Directed communication link from node tx to node rx.
struct Link {
    int id;
    int tx;
    int rx;
    double length;  ///< cached Euclidean distance tx -> rx [m]
};

/// Directed communication graph: one link per ordered node pair within the
/// communication range.  Links come in opposite-direction pairs.
struct CommGraph {
    std::vector<Node> nodes;
    std::vector<Link> links;
    RadioParams params;
};

/// n nodes with coordinates drawn uniformly from [0, side]^2.
///
/// The generator is std::mt19937_64 with the top 53 bits of each draw
/// scaled to [0, 1); this is fully specified by the standard, so a seed
/// reproduces the same coordinates bit-exactly on any platform.  A draw
/// that exactly coincides with an earlier node is redrawn.
std::vector<Node> generate_topology(int n, double side, std::uint64_t seed);

/// Emits a directed link for every ordered node pair within range, ids in
/// (tx, rx) lexicographic order.  Throws DegenerateGeometryError on
/// coincident nodes.
CommGraph build_comm_graph(std::vector<Node> nodes, const RadioParams& params);

/// CSV parse failure; the message names the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_number);
    int line() const { return line_; }

private:
    int line_;
};

// Topology CSV: header "id,x,y", one node per row, coordinates in decimal
// meters.  Doubles are written shortest-round-trip so save/load is exact.
std::vector<Node> read_topology_csv(std::istream& in);
void write_topology_csv(std::ostream& out, const std::vector<Node>& nodes);
std::vector<Node> load_topology(const std::string& path);
void save_topology(const std::vector<Node>& nodes, const std::string& path);

// Link list export: header "link_id,tx,rx,length_m".
void write_links_csv(std::ostream& out, const CommGraph& g);

}  // namespace stdma

#endif  // STDMA_TOPOLOGY_HPP
