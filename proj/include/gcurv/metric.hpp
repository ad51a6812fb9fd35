#pragma once

// All-pairs shortest paths on unweighted graphs and the dense distance matrix.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "gcurv/error.hpp"
#include "gcurv/graph.hpp"

namespace gcurv {

using Distance = std::uint32_t;

class DistanceMatrix {
public:
    DistanceMatrix() = default;

    // Row-major entries; checked only for shape.
    DistanceMatrix(std::size_t n, std::vector<Distance> entries)
        : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n_ * n_) fail(ErrorKind::Input, "distance matrix is not square");
    }

    std::size_t order() const { return n_; }

    Distance operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    std::span<const Distance> row(std::size_t i) const {
        return {entries_.data() + i * n_, n_};
    }

    std::span<const Distance> entries() const { return entries_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Distance> entries_;
};

namespace detail {

inline void bfs_row(const Graph& g, Vertex source, std::span<Distance> row,
                    std::vector<Vertex>& queue) {
    constexpr Distance kUnseen = UINT32_MAX;
    std::fill(row.begin(), row.end(), kUnseen);
    queue.clear();
    row[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex v : g.neighbors(u)) {
            if (row[v] == kUnseen) {
                row[v] = row[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

}  // namespace detail

// One BFS per source. Sources are split into contiguous blocks, one per
// worker; workers write disjoint rows, so the result does not depend on
// the worker count. workers = 0 picks the hardware concurrency.
inline DistanceMatrix apsp(const Graph& g, unsigned workers = 1) {
    const std::size_t n = g.order();
    {
        const auto level = bfs_levels(g, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (level[v] < 0) {
                fail(ErrorKind::Disconnected, "graph is disconnected: no path between vertex 0 and vertex " +
                                                  std::to_string(v));
            }
        }
    }

    std::vector<Distance> entries(n * n);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    auto run_block = [&](std::size_t begin, std::size_t end) {
        std::vector<Vertex> queue;
        queue.reserve(n);
        for (std::size_t s = begin; s < end; ++s) {
            detail::bfs_row(g, static_cast<Vertex>(s), {entries.data() + s * n, n}, queue);
        }
    };

    if (workers <= 1) {
        run_block(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t block = (n + workers - 1) / workers;
        for (std::size_t begin = 0; begin < n; begin += block) {
            pool.emplace_back(run_block, begin, std::min(n, begin + block));
        }
    }
    return DistanceMatrix(n, std::move(entries));
}

inline std::vector<std::uint64_t> row_sums(const DistanceMatrix& d) {
    std::vector<std::uint64_t> sums(d.order());
    for (std::size_t i = 0; i < d.order(); ++i) {
        const auto row = d.row(i);
        sums[i] = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
    }
    return sums;
}

struct Eccentricities {
    std::vector<Distance> ecc;
    Distance radius = 0;
    Distance diameter = 0;
};

inline Eccentricities eccentricities(const DistanceMatrix& d) {
    Eccentricities out;
    out.ecc.resize(d.order());
    for (std::size_t i = 0; i < d.order(); ++i) {
        const auto row = d.row(i);
        out.ecc[i] = *std::max_element(row.begin(), row.end());
    }
    if (!out.ecc.empty()) {
        out.radius = *std::min_element(out.ecc.begin(), out.ecc.end());
        out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());
    }
    return out;
}

}  // namespace gcurv
