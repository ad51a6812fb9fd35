#include <gtest/gtest.h>

#include "gcurv/generators.hpp"
#include "gcurv/metric.hpp"
#include "oracles.hpp"

namespace gcurv {
namespace {

std::vector<std::vector<Distance>> rows(const DistanceMatrix& d) {
    std::vector<std::vector<Distance>> out;
    for (std::size_t i = 0; i < d.order(); ++i) out.emplace_back(d.row(i).begin(), d.row(i).end());
    return out;
}

TEST(ApspTest, Examples) {
    EXPECT_EQ(rows(apsp(path_graph(3))),
              (std::vector<std::vector<Distance>>{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));

    const auto k4 = apsp(complete_graph(4));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(k4(i, j), i == j ? 0u : 1u);
    }

    const auto c4 = apsp(cycle_graph(4));
    EXPECT_EQ(rows(c4)[0], (std::vector<Distance>{0, 1, 2, 1}));
    for (auto s : row_sums(c4)) EXPECT_EQ(s, 4u);
}

TEST(ApspTest, DisconnectedNamesUnreachablePair) {
    const Graph g(4, std::vector<Edge>{{0, 1}, {2, 3}});
    try {
        apsp(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
        EXPECT_NE(std::string(e.what()).find("vertex 0 and vertex 2"), std::string::npos) << e.what();
    }
}

TEST(ApspTest, MatchesFloydWarshall) {
    auto all = testing::family_instances(1, 32, 5);
    all.push_back({"grid:4,8", grid_graph(4, 8)});
    for (auto& g : testing::gnp_instances(100, 32, 5000)) all.push_back(std::move(g));
    for (const auto& [name, g] : all) {
        const auto d = apsp(g);
        const auto ref = testing::floyd_warshall(g);
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t j = 0; j < g.order(); ++j) ASSERT_EQ(d(i, j), ref[i][j]) << name;
        }
    }
}

TEST(ApspTest, WorkerCountDoesNotChangeResult) {
    const auto g = gnp_graph(150, {1, 20}, 4).graph;
    const auto base = apsp(g, 1);
    for (unsigned w : {2u, 3u, 7u, 0u, 400u}) EXPECT_EQ(apsp(g, w), base) << w;
}

TEST(DistanceMatrixTest, MetricInvariants) {
    for (const auto& [name, g] : testing::gnp_instances(20, 20, 77)) {
        const auto d = apsp(g);
        const std::size_t n = d.order();
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(d(i, i), 0u);
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_EQ(d(i, j), d(j, i));
                if (i != j) {
                    EXPECT_GE(d(i, j), 1u);
                    EXPECT_EQ(d(i, j) == 1, g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)));
                }
                for (std::size_t k = 0; k < n; ++k) EXPECT_LE(d(i, k), d(i, j) + d(j, k));
            }
        }
    }
}

TEST(RowSumsTest, Examples) {
    EXPECT_EQ(row_sums(apsp(path_graph(3))), (std::vector<std::uint64_t>{3, 2, 3}));
    EXPECT_EQ(row_sums(apsp(hypercube_graph(3))), std::vector<std::uint64_t>(8, 12));
    EXPECT_EQ(row_sums(apsp(star_graph(4))), (std::vector<std::uint64_t>{3, 5, 5, 5}));
}

TEST(RowSumsTest, VertexTransitiveFamiliesHaveEqualRowSums) {
    std::vector<Graph> graphs;
    for (std::size_t n = 3; n <= 20; ++n) graphs.push_back(cycle_graph(n));
    for (std::size_t n = 1; n <= 20; ++n) graphs.push_back(complete_graph(n));
    for (unsigned d = 0; d <= 6; ++d) graphs.push_back(hypercube_graph(d));
    for (const auto& g : graphs) {
        const auto s = row_sums(apsp(g));
        EXPECT_TRUE(std::all_of(s.begin(), s.end(), [&](auto x) { return x == s.front(); }));
    }
}

TEST(EccentricityTest, Examples) {
    const auto p3 = eccentricities(apsp(path_graph(3)));
    EXPECT_EQ(p3.ecc, (std::vector<Distance>{2, 1, 2}));
    EXPECT_EQ(p3.radius, 1u);
    EXPECT_EQ(p3.diameter, 2u);

    for (std::size_t n = 2; n <= 8; ++n) {
        const auto k = eccentricities(apsp(complete_graph(n)));
        EXPECT_EQ(k.radius, 1u);
        EXPECT_EQ(k.diameter, 1u);
    }
    EXPECT_EQ(eccentricities(apsp(cycle_graph(5))).ecc, std::vector<Distance>(5, 2));
}

}  // namespace
}  // namespace gcurv
