#pragma once

// Test-only reference computations, independent of the library's fast paths.

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gcurv/generators.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/metric.hpp"
#include "gcurv/rational.hpp"

namespace gcurv::testing {

// "p/q" or "p".
inline Rational R(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(mpz_class(std::string(s)), mpz_class(1));
    return Rational(mpz_class(std::string(s.substr(0, slash))),
                    mpz_class(std::string(s.substr(slash + 1))));
}

inline std::vector<Rational> Rs(std::initializer_list<std::string_view> xs) {
    std::vector<Rational> out;
    for (auto x : xs) out.push_back(R(x));
    return out;
}

inline std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto inf = std::numeric_limits<std::uint64_t>::max() / 4;
    std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (Vertex j : g.neighbors(static_cast<Vertex>(i))) d[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
            }
        }
    }
    return d;
}

// For a tree, D^{-1} = -L/2 + tau tau^T / (2(n-1)) with tau_i = 2 - deg(i),
// so the unique solution of D w = n 1 is w_i = n (2 - deg(i)) / (n - 1).
inline std::vector<Rational> tree_curvature(const Graph& tree) {
    const std::size_t n = tree.order();
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto tau = 2 - static_cast<std::int64_t>(tree.degree(static_cast<Vertex>(i)));
        w[i] = rational_from(static_cast<std::int64_t>(n) * tau, static_cast<std::int64_t>(n) - 1);
    }
    return w;
}

struct NamedGraph {
    std::string name;
    Graph graph;
};

inline std::vector<NamedGraph> gnp_instances(std::size_t count, std::size_t max_n,
                                             std::uint64_t seed_base = 1000) {
    static constexpr EdgeProbability probs[] = {{1, 4}, {1, 3}, {1, 2}, {2, 3}};
    std::vector<NamedGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 4 + i % (max_n - 3);
        const auto p = probs[i % 4];
        auto g = gnp_graph(n, p, seed_base + i);
        out.push_back({"gnp:" + std::to_string(n) + "," + std::to_string(p.numerator) + "/" +
                           std::to_string(p.denominator) + "@" + std::to_string(seed_base + i),
                       std::move(g.graph)});
    }
    return out;
}

// Deterministic families: path, cycle, star, complete for n in [lo, hi],
// hypercube d = 1..max_dim, plus a few grids.
inline std::vector<NamedGraph> family_instances(std::size_t lo, std::size_t hi, unsigned max_dim) {
    std::vector<NamedGraph> out;
    for (std::size_t n = lo; n <= hi; ++n) {
        out.push_back({"path:" + std::to_string(n), path_graph(n)});
        if (n >= 3) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
        out.push_back({"star:" + std::to_string(n), star_graph(n)});
        out.push_back({"complete:" + std::to_string(n), complete_graph(n)});
    }
    for (unsigned d = 1; d <= max_dim; ++d) {
        out.push_back({"hypercube:" + std::to_string(d), hypercube_graph(d)});
    }
    return out;
}

// max over P on the grid {k / denom} of min_u (M P)_u; a lower bound on the
// game value that is exact when an optimal strategy lies on the grid.
inline Rational grid_game_lower_bound(const std::vector<std::vector<Rational>>& m, unsigned denom) {
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<unsigned> parts(cols, 0);
    bool have = false;
    Rational best;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
        if (idx + 1 == cols) {
            parts[idx] = left;
            Rational lo;
            for (std::size_t i = 0; i < rows; ++i) {
                Rational acc;
                for (std::size_t j = 0; j < cols; ++j) {
                    acc += m[i][j] * rational_from(parts[j], denom);
                }
                if (i == 0 || acc < lo) lo = acc;
            }
            if (!have || lo > best) {
                best = lo;
                have = true;
            }
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            parts[idx] = k;
            rec(idx + 1, left - k);
        }
    };
    rec(0, denom);
    return best;
}

inline std::vector<std::vector<Rational>> to_rational(const DistanceMatrix& d) {
    std::vector<std::vector<Rational>> m(d.order(), std::vector<Rational>(d.order()));
    for (std::size_t i = 0; i < d.order(); ++i) {
        for (std::size_t j = 0; j < d.order(); ++j) m[i][j] = d(i, j);
    }
    return m;
}

}  // namespace gcurv::testing
