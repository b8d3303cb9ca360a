#include <gtest/gtest.h>

#include <map>
#include <random>

#include "majcol/error.hpp"
#include "majcol/instances.hpp"
#include "oracles.hpp"

using namespace majcol;

namespace {

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
    std::map<std::size_t, std::size_t> h;
    for (Vertex v = 0; v < g.vertex_count(); ++v) ++h[g.degree(v)];
    return h;
}

}  // namespace

TEST(LowerBounds, Bipartite) {
    auto g3 = bipartite_lower_bound(3);
    EXPECT_EQ(g3.vertex_count(), 12u);
    EXPECT_EQ(g3.edge_count(), 35u);
    EXPECT_EQ(g3.min_degree(), 5u);
    EXPECT_TRUE(is_bipartite(g3));
    EXPECT_EQ(degree_histogram(g3), (std::map<std::size_t, std::size_t>{{5, 2}, {6, 10}}));

    auto g2 = bipartite_lower_bound(2);
    EXPECT_EQ(g2.edge_count(), 3u);
    EXPECT_EQ(g2.min_degree(), 1u);

    auto g4 = bipartite_lower_bound(4);
    EXPECT_EQ(g4.vertex_count(), 24u);
    EXPECT_EQ(g4.edge_count(), 143u);
    EXPECT_EQ(g4.min_degree(), 11u);
}

TEST(LowerBounds, General) {
    auto g2 = general_lower_bound(2);
    EXPECT_EQ(g2.vertex_count(), 6u);
    EXPECT_EQ(g2.edge_count(), 10u);
    EXPECT_EQ(degree_histogram(g2), (std::map<std::size_t, std::size_t>{{3, 5}, {5, 1}}));

    auto g3 = general_lower_bound(3);
    EXPECT_EQ(g3.vertex_count(), 11u);
    EXPECT_EQ(g3.edge_count(), 45u);
    EXPECT_EQ(degree_histogram(g3), (std::map<std::size_t, std::size_t>{{8, 10}, {10, 1}}));

    for (unsigned k = 2; k <= 7; ++k) {
        auto g = general_lower_bound(k);
        EXPECT_EQ(g.min_degree(), std::size_t{k} * k - 1);
        // (k^2 + 1)(k - 1) + k is odd.
        EXPECT_EQ(((std::size_t{k} * k + 1) * (k - 1) + k) % 2, 1u);
    }
}

TEST(RandomGraphs, Contract) {
    auto g = random_min_degree_graph({10, 4, false, 0, 1});
    EXPECT_EQ(g.vertex_count(), 10u);
    EXPECT_GE(g.min_degree(), 4u);

    auto b = random_min_degree_graph({24, 6, true, 0, 1});
    EXPECT_GE(b.min_degree(), 6u);
    EXPECT_TRUE(is_bipartite(b));
    for (const auto& e : b.edges()) EXPECT_NE(e.u < 12, e.v < 12);

    EXPECT_THROW(random_min_degree_graph({5, 5, false, 0, 1}), PreconditionError);
    EXPECT_THROW(random_min_degree_graph({10, 6, true, 0, 1}), PreconditionError);
}

TEST(RandomGraphs, DeterministicInSeed) {
    RandomGraphOptions o{40, 7, false, 25, 12345};
    EXPECT_EQ(random_min_degree_graph(o).edges(), random_min_degree_graph(o).edges());
    auto other = o;
    other.seed = 12346;
    EXPECT_NE(random_min_degree_graph(o).edges(), random_min_degree_graph(other).edges());
}

TEST(RandomGraphs, ManySeeds) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const std::size_t delta = rng() % 12;
        const bool bip = rng() % 2;
        const std::size_t n = bip ? 2 * delta + rng() % 10 : delta + 1 + rng() % 15;
        auto g = random_min_degree_graph({n, delta, bip, rng() % 10, rng()});
        if (n > 0) EXPECT_GE(g.min_degree(), delta);
        if (bip) EXPECT_TRUE(is_bipartite(g));
    }
}

TEST(Oracle, Examples) {
    std::vector<Edge> p3{{0, 1}, {1, 2}};
    auto path = exhaustive_search(Graph::build(3, p3), 2, 3);
    EXPECT_TRUE(path.infeasible());
    EXPECT_EQ(path.node_count, 0u);  // leaves have cap 0

    std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    auto sq = exhaustive_search(Graph::build(4, c4), 2, 3);
    ASSERT_TRUE(sq.colouring);
    EXPECT_TRUE(check_majority(Graph::build(4, c4), *sq.colouring, 2).pass);

    auto lb = exhaustive_search(general_lower_bound(2), 2, 3);
    EXPECT_TRUE(lb.infeasible());
    EXPECT_GT(lb.node_count, 0u);
    EXPECT_LT(lb.node_count, 59049u);
}

TEST(Oracle, PigeonholePrefilter) {
    for (unsigned k = 2; k <= 6; ++k) {
        auto out = exhaustive_search(bipartite_lower_bound(k), k, k + 1);
        EXPECT_TRUE(out.infeasible());
        EXPECT_EQ(out.node_count, 0u);
    }
}

TEST(Oracle, LimitIsReported) {
    auto out = exhaustive_search(general_lower_bound(2), 2, 3, 5);
    EXPECT_TRUE(out.limit_hit);
    EXPECT_FALSE(out.colouring);
    EXPECT_FALSE(out.infeasible());
    EXPECT_LE(out.node_count, 5u);
}

TEST(Oracle, AgreesWithNaiveEnumeration) {
    for (const auto& g : majcol::testing::connected_graphs(7)) {
        if (g.edge_count() > 8) continue;
        for (unsigned k : {2u, 3u}) {
            for (unsigned colours : {2u, 3u}) {
                auto out = exhaustive_search(g, k, colours);
                ASSERT_FALSE(out.limit_hit);
                EXPECT_EQ(out.colouring.has_value(), majcol::testing::naive_colouring_exists(g, k, colours));
                if (out.colouring) EXPECT_TRUE(majcol::testing::majority_ok(g, out.colouring->colours, k));
            }
        }
    }
}
