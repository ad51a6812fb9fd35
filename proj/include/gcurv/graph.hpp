#pragma once

// Finite simple undirected graphs, the edge-list file format, and
// structural validation.
//
// Edge-list format:
//   # optional comment lines
//   n m
//   u v      (exactly m lines, 0 <= u,v < n, u != v)
// Duplicate edges are merged; self-loops are rejected.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcurv/error.hpp"

namespace gcurv {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    // Throws ErrorKind::Input on n = 0, out-of-range endpoints or self-loops.
    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        if (n == 0) fail(ErrorKind::Input, "graph must have at least one vertex");
        if (n > UINT32_MAX) fail(ErrorKind::Input, "too many vertices");
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) {
                fail(ErrorKind::Input, "edge (" + std::to_string(u) + ", " +
                                           std::to_string(v) + ") has a vertex outside [0, " +
                                           std::to_string(n) + ")");
            }
            if (u == v) fail(ErrorKind::Input, "self-loop at vertex " + std::to_string(u));
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nbrs : adjacency_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            edge_count_ += nbrs.size();
        }
        edge_count_ /= 2;
    }

    Graph(std::size_t n, const std::vector<Edge>& edges)
        : Graph(n, std::span<const Edge>(edges)) {}

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& nbrs = adjacency_.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    // Sorted, u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u) {
            for (Vertex v : adjacency_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

namespace detail {

inline bool blank_or_comment(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly `count` unsigned integers from the line; nothing else allowed.
inline bool read_uints(const std::string& line, std::uint64_t* out, int count) {
    std::istringstream in(line);
    for (int i = 0; i < count; ++i) {
        in >> std::ws;
        if (in.peek() == '-' || in.peek() == '+') return false;
        if (!(in >> out[i])) return false;
    }
    in >> std::ws;
    return in.eof();
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_content = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!detail::blank_or_comment(line)) return true;
        }
        return false;
    };
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };

    if (!next_content()) fail(ErrorKind::Input, "edge list is empty: missing \"n m\" header");
    std::uint64_t header[2];
    if (!detail::read_uints(line, header, 2)) {
        fail(ErrorKind::Input, where() + "malformed header \"" + line + "\", expected \"n m\"");
    }
    const std::uint64_t n = header[0];
    const std::uint64_t m = header[1];
    if (n == 0) fail(ErrorKind::Input, where() + "vertex count must be positive");
    if (n > UINT32_MAX) fail(ErrorKind::Input, where() + "vertex count too large");

    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < m; ++k) {
        if (!next_content()) {
            fail(ErrorKind::Input, "expected " + std::to_string(m) + " edges, found " +
                                       std::to_string(k));
        }
        std::uint64_t uv[2];
        if (!detail::read_uints(line, uv, 2)) {
            fail(ErrorKind::Input, where() + "malformed edge \"" + line + "\"");
        }
        if (uv[0] >= n || uv[1] >= n) {
            fail(ErrorKind::Input, where() + "vertex index out of range [0, " +
                                       std::to_string(n) + ")");
        }
        if (uv[0] == uv[1]) {
            fail(ErrorKind::Input, where() + "self-loop at vertex " + std::to_string(uv[0]));
        }
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (next_content()) {
        fail(ErrorKind::Input, where() + "unexpected content after " + std::to_string(m) +
                                   " edges");
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

inline std::string serialize(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

struct ValidationReport {
    bool connected = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::string> issues;
};

// Breadth-first order from `source`; -1 marks unreachable vertices.
inline std::vector<std::int64_t> bfs_levels(const Graph& g, Vertex source) {
    std::vector<std::int64_t> level(g.order(), -1);
    std::queue<Vertex> frontier;
    level[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const Vertex u = frontier.front();
        frontier.pop();
        for (Vertex v : g.neighbors(u)) {
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                frontier.push(v);
            }
        }
    }
    return level;
}

inline ValidationReport validate(const Graph& g) {
    ValidationReport report;
    report.n = g.order();
    report.m = g.size();

    const auto level = bfs_levels(g, 0);
    std::vector<Vertex> unreachable;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (level[v] < 0) unreachable.push_back(v);
    }
    report.connected = unreachable.empty();

    if (!report.connected) {
        std::string msg = std::to_string(unreachable.size()) +
                          " vertices unreachable from vertex 0 (first: " +
                          std::to_string(unreachable.front()) + ")";
        report.issues.push_back(std::move(msg));
    }
    if (g.order() > 1) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 0) report.issues.push_back("isolated vertex " + std::to_string(v));
        }
    }
    return report;
}

}  // namespace gcurv
