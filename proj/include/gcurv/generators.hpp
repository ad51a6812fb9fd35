#pragma once

// Synthetic graph families used as test inputs.
//
// Spec strings: "family:param[,param...]", e.g. "path:5", "grid:3,4",
// "hypercube:3", "gnp:20,1/4". gnp takes its seed separately.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcurv/counter_rng.hpp"
#include "gcurv/error.hpp"
#include "gcurv/graph.hpp"

namespace gcurv {

inline Graph path_graph(std::size_t n) {
    if (n < 1) fail(ErrorKind::Input, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) fail(ErrorKind::Input, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    if (n < 1) fail(ErrorKind::Input, "complete needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

// Center 0, leaves 1..n-1.
inline Graph star_graph(std::size_t n) {
    if (n < 1) fail(ErrorKind::Input, "star needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

inline Graph hypercube_graph(unsigned dim) {
    if (dim > 20) fail(ErrorKind::Input, "hypercube dimension must be <= 20");
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        for (unsigned k = 0; k < dim; ++k) {
            const Vertex u = v ^ (Vertex{1} << k);
            if (v < u) edges.emplace_back(v, u);
        }
    }
    return Graph(n, edges);
}

// Vertex (r, c) has index r * cols + c.
inline Graph grid_graph(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) fail(ErrorKind::Input, "grid needs rows, cols >= 1");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<Vertex>(r * cols + c);
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
        }
    }
    return Graph(rows * cols, edges);
}

struct EdgeProbability {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

struct GnpResult {
    Graph graph;
    unsigned retries = 0;
};

inline constexpr unsigned kGnpMaxRetries = 1000;

// Edge {i, j} is kept iff a coin keyed by (seed, attempt, i, j) lands below
// numerator/denominator. Retries with attempt + 1 until connected.
inline GnpResult gnp_graph(std::size_t n, EdgeProbability p, std::uint64_t seed) {
    if (n < 1) fail(ErrorKind::Input, "gnp needs n >= 1");
    if (p.denominator == 0 || p.numerator > p.denominator) {
        fail(ErrorKind::Input, "gnp probability must be a fraction in [0, 1]");
    }
    for (unsigned attempt = 0; attempt <= kGnpMaxRetries; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                CounterStream coin{seed, attempt, i, j};
                if (coin.below(p.denominator) < p.numerator) edges.emplace_back(i, j);
            }
        }
        Graph g(n, edges);
        if (validate(g).connected) return {std::move(g), attempt};
    }
    fail(ErrorKind::Disconnected, "gnp failed to produce a connected graph within " +
                                      std::to_string(kGnpMaxRetries) + " retries");
}

enum class Family { Path, Cycle, Complete, Star, Hypercube, Grid, Gnp };

inline std::optional<Family> family_from_name(std::string_view name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "hypercube") return Family::Hypercube;
    if (name == "grid") return Family::Grid;
    if (name == "gnp") return Family::Gnp;
    return std::nullopt;
}

struct GeneratorSpec {
    Family family = Family::Path;
    std::vector<std::uint64_t> params;
    std::optional<EdgeProbability> probability;  // gnp only

    static bool looks_like_spec(std::string_view text) {
        const auto colon = text.find(':');
        return colon != std::string_view::npos && family_from_name(text.substr(0, colon));
    }

    static GeneratorSpec parse(std::string_view text) {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) {
            fail(ErrorKind::Input, "generator spec \"" + std::string(text) +
                                       "\" must look like family:param[,param...]");
        }
        const auto family = family_from_name(text.substr(0, colon));
        if (!family) {
            fail(ErrorKind::Input, "unknown graph family \"" +
                                       std::string(text.substr(0, colon)) + "\"");
        }
        GeneratorSpec spec;
        spec.family = *family;

        std::vector<std::string_view> fields;
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }

        auto to_uint = [&](std::string_view s) {
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
                fail(ErrorKind::Input, "bad generator parameter \"" + std::string(s) + "\" in \"" +
                                           std::string(text) + "\"");
            }
            return v;
        };

        std::size_t expected = 1;
        if (spec.family == Family::Grid || spec.family == Family::Gnp) expected = 2;
        if (fields.size() != expected) {
            fail(ErrorKind::Input, "generator \"" + std::string(text) + "\" takes " +
                                       std::to_string(expected) + " parameter(s)");
        }
        if (spec.family == Family::Gnp) {
            spec.params.push_back(to_uint(fields[0]));
            const auto slash = fields[1].find('/');
            if (slash == std::string_view::npos) {
                fail(ErrorKind::Input, "gnp probability must be written p/q, got \"" +
                                           std::string(fields[1]) + "\"");
            }
            spec.probability = EdgeProbability{to_uint(fields[1].substr(0, slash)),
                                               to_uint(fields[1].substr(slash + 1))};
        } else {
            for (auto f : fields) spec.params.push_back(to_uint(f));
        }
        return spec;
    }
};

struct Generated {
    Graph graph;
    unsigned retries = 0;
};

inline Generated generate(const GeneratorSpec& spec, std::uint64_t seed = 0) {
    const auto& p = spec.params;
    auto need = [&](std::size_t count) {
        if (p.size() != count) fail(ErrorKind::Input, "wrong number of generator parameters");
    };
    switch (spec.family) {
        case Family::Path: need(1); return {path_graph(p[0])};
        case Family::Cycle: need(1); return {cycle_graph(p[0])};
        case Family::Complete: need(1); return {complete_graph(p[0])};
        case Family::Star: need(1); return {star_graph(p[0])};
        case Family::Hypercube:
            need(1);
            if (p[0] > 20) fail(ErrorKind::Input, "hypercube dimension must be <= 20");
            return {hypercube_graph(static_cast<unsigned>(p[0]))};
        case Family::Grid: need(2); return {grid_graph(p[0], p[1])};
        case Family::Gnp: {
            need(1);
            if (!spec.probability) fail(ErrorKind::Input, "gnp needs an edge probability");
            auto r = gnp_graph(p[0], *spec.probability, seed);
            return {std::move(r.graph), r.retries};
        }
    }
    fail(ErrorKind::Input, "unknown graph family");
}

inline Generated generate(std::string_view spec, std::uint64_t seed = 0) {
    return generate(GeneratorSpec::parse(spec), seed);
}

}  // namespace gcurv
