#include "stdma/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

namespace stdma {

bool operator==(const Node& a, const Node& b) { return a.id == b.id && a.x == b.x && a.y == b.y; }

std::vector<Node> generate_topology(int n, double side, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_topology: n must be >= 1");
    if (!(side > 0.0) || !std::isfinite(side))
        throw std::invalid_argument("generate_topology: side must be > 0");

    std::mt19937_64 rng(seed);
    // Top 53 bits of a draw -> [0, 1); fixed scaling keeps seeds portable
    // across standard library implementations.
    auto uniform = [&rng](double scale) {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 * scale;
    };

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (;;) {
            const double x = uniform(side);
            const double y = uniform(side);
            const bool clash = std::any_of(nodes.begin(), nodes.end(), [&](const Node& m) {
                return m.x == x && m.y == y;
            });
            if (!clash) {
                nodes.push_back(Node{i, x, y});
                break;
            }
        }
    }
    return nodes;
}

CommGraph build_comm_graph(std::vector<Node> nodes, const RadioParams& params) {
    const int n = static_cast<int>(nodes.size());
    for (int i = 0; i < n; ++i) {
        if (nodes[static_cast<std::size_t>(i)].id != i)
            throw std::invalid_argument("build_comm_graph: node ids must be contiguous from 0");
        if (!std::isfinite(nodes[static_cast<std::size_t>(i)].x) ||
            !std::isfinite(nodes[static_cast<std::size_t>(i)].y))
            throw std::invalid_argument("build_comm_graph: non-finite coordinate");
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (nodes[static_cast<std::size_t>(a)].x == nodes[static_cast<std::size_t>(b)].x &&
                nodes[static_cast<std::size_t>(a)].y == nodes[static_cast<std::size_t>(b)].y)
                throw DegenerateGeometryError("build_comm_graph: nodes " + std::to_string(a) +
                                              " and " + std::to_string(b) +
                                              " share identical coordinates");

    const double range = communication_range(params);
    std::vector<Link> links;
    int next_id = 0;
    for (int tx = 0; tx < n; ++tx) {
        for (int rx = 0; rx < n; ++rx) {
            if (tx == rx) continue;
            const double d = distance(nodes[static_cast<std::size_t>(tx)],
                                      nodes[static_cast<std::size_t>(rx)]);
            if (within_range(d, range)) links.push_back(Link{next_id++, tx, rx, d});
        }
    }
    return CommGraph{std::move(nodes), std::move(links), params};
}

ParseError::ParseError(const std::string& what, int line_number)
    : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
      line_(line_number) {}

namespace {

std::string_view trim_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

int parse_int(std::string_view field, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(std::string("expected integer ") + what + ", got '" +
                             std::string(field) + "'",
                         line_no);
    return value;
}

double parse_double(std::string_view field, int line_no, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(std::string("expected number ") + what + ", got '" + std::string(field) +
                             "'",
                         line_no);
    if (!std::isfinite(value))
        throw ParseError(std::string("non-finite ") + what, line_no);
    return value;
}

void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

}  // namespace

std::vector<Node> read_topology_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) return {};  // empty file -> empty node list
    if (trim_cr(line) != "id,x,y")
        throw ParseError("expected topology header 'id,x,y'", 1);

    struct Row {
        Node node;
        int line_no;
    };
    std::vector<Row> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim_cr(line);
        if (body.empty()) continue;
        const auto fields = split_fields(body);
        if (fields.size() != 3)
            throw ParseError("expected 3 fields 'id,x,y', got " + std::to_string(fields.size()),
                             line_no);
        Node node{};
        node.id = parse_int(fields[0], line_no, "id");
        node.x = parse_double(fields[1], line_no, "x");
        node.y = parse_double(fields[2], line_no, "y");
        rows.push_back(Row{node, line_no});
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.node.id < b.node.id; });
    std::vector<Node> nodes;
    nodes.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k > 0 && rows[k].node.id == rows[k - 1].node.id)
            throw ParseError("duplicate node id " + std::to_string(rows[k].node.id),
                             rows[k].line_no);
        if (rows[k].node.id != static_cast<int>(k))
            throw ParseError("node ids must be contiguous from 0; unexpected id " +
                                 std::to_string(rows[k].node.id),
                             rows[k].line_no);
        nodes.push_back(rows[k].node);
    }
    return nodes;
}

void write_topology_csv(std::ostream& out, const std::vector<Node>& nodes) {
    std::string buf = "id,x,y\n";
    for (const Node& node : nodes) {
        buf += std::to_string(node.id);
        buf += ',';
        append_double(buf, node.x);
        buf += ',';
        append_double(buf, node.y);
        buf += '\n';
    }
    out << buf;
}

std::vector<Node> load_topology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open topology file '" + path + "'", 0);
    return read_topology_csv(in);
}

void save_topology(const std::vector<Node>& nodes, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write topology file '" + path + "'");
    write_topology_csv(out, nodes);
}

void write_links_csv(std::ostream& out, const CommGraph& g) {
    std::string buf = "link_id,tx,rx,length_m\n";
    for (const Link& link : g.links) {
        buf += std::to_string(link.id);
        buf += ',';
        buf += std::to_string(link.tx);
        buf += ',';
        buf += std::to_string(link.rx);
        buf += ',';
        append_double(buf, link.length);
        buf += '\n';
    }
    out << buf;
}

}  // namespace stdma
