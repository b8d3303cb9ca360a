#include <gtest/gtest.h>

#include <random>

#include "majcol/error.hpp"
#include "majcol/instances.hpp"
#include "majcol/schemes.hpp"
#include "oracles.hpp"

using namespace majcol;
using majcol::testing::majority_ok;

namespace {

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph::build(a + b, e);
}

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
    return Graph::build(n, e);
}

std::vector<std::size_t> colour_counts_at(const Graph& g, const EdgeColouring& c, Vertex v) {
    std::vector<std::size_t> count(c.colour_count + 1, 0);
    for (const auto& inc : g.incident(v)) ++count[c.colours[inc.edge]];
    return count;
}

}  // namespace

TEST(Thresholds, Values) {
    EXPECT_EQ(refined_shape(5).n, 2u);
    EXPECT_EQ(refined_shape(5).m, 2u);
    EXPECT_EQ(refined_threshold(5), 45u);
    EXPECT_EQ(refined_shape(2).n, 1u);
    EXPECT_EQ(refined_shape(2).m, 1u);
    EXPECT_EQ(refined_threshold(2), 8u);
    EXPECT_EQ(refined_shape(6).m, 3u);
    EXPECT_EQ(refined_threshold(6), 66u);
    EXPECT_EQ(general_threshold(5), 50u);
    EXPECT_EQ(bipartite_threshold(3), 6u);
}

TEST(Thresholds, GeneralWeights) {
    EXPECT_EQ(general_weight(8, 2, 1), Rational(3, 8));
    EXPECT_EQ(general_weight(8, 2, 2), Rational(1, 2));
    EXPECT_EQ(general_weight(18, 3, 1), Rational(5, 18));
}

TEST(Bipartite, SquareKTwo) {
    auto g = complete_bipartite(2, 2);
    auto r = colour_bipartite(g, 2);
    EXPECT_TRUE(r.report.verdict.pass);
    EXPECT_TRUE(majority_ok(g, r.colouring.colours, 2));
    EXPECT_EQ(r.colouring.colour_count, 3u);
}

TEST(Bipartite, K66ExactSplit) {
    auto g = complete_bipartite(6, 6);
    auto r = colour_bipartite(g, 2);
    for (Vertex v = 0; v < 12; ++v) {
        auto c = colour_counts_at(g, r.colouring, v);
        for (Colour i = 1; i <= 3; ++i) EXPECT_EQ(c[i], 2u) << "vertex " << v << " colour " << i;
    }
    auto r3 = colour_bipartite(g, 3);
    EXPECT_TRUE(majority_ok(g, r3.colouring.colours, 3));
}

TEST(Bipartite, Preconditions) {
    EXPECT_THROW(colour_bipartite(complete(4), 2), PreconditionError);
    EXPECT_THROW(colour_bipartite(complete_bipartite(1, 3), 2), PreconditionError);
    EXPECT_THROW(colour_bipartite(complete_bipartite(4, 4), 1), PreconditionError);
}

TEST(General, CompleteNine) {
    auto g = complete(9);
    auto r = colour_general_2k2(g, 2);
    EXPECT_TRUE(majority_ok(g, r.colouring.colours, 2));
    ASSERT_EQ(r.report.alpha.size(), 2u);
    EXPECT_EQ(r.report.alpha[0], Rational(3, 8));
    EXPECT_EQ(r.report.alpha[1], Rational(1, 2));
}

TEST(General, RandomKThree) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        auto g = random_min_degree_graph({30, 18, false, 20, rng()});
        auto r = colour_general_2k2(g, 3);
        EXPECT_TRUE(majority_ok(g, r.colouring.colours, 3));
    }
    EXPECT_THROW(colour_general_2k2(complete(8), 2), PreconditionError);
}

TEST(Refined, RandomKFive) {
    auto g = random_min_degree_graph({60, 45, false, 0, 17});
    auto r = colour_refined(g, 5);
    EXPECT_TRUE(majority_ok(g, r.colouring.colours, 5));
    EXPECT_EQ(r.report.n, 2u);
    EXPECT_EQ(r.report.m, 2u);
    EXPECT_LE(r.report.rule_a_max_vertices, 2u);
    EXPECT_THROW(colour_refined(random_min_degree_graph({60, 44, false, 0, 1}), 5), PreconditionError);
}

TEST(Refined, SpecialInSeparateBranches) {
    // This graph has a vertex that is bad under prefixes 0 and 1 at level 2.
    auto g = random_min_degree_graph({69, 66, false, 0, 18000});
    auto r = colour_refined(g, 6);
    EXPECT_TRUE(majority_ok(g, r.colouring.colours, 6));
    EXPECT_EQ(r.report.m, 3u);
}

TEST(Refined, KTwoMatchesGeneralBound) {
    auto g = complete(9);
    auto r = colour_refined(g, 2);
    EXPECT_TRUE(majority_ok(g, r.colouring.colours, 2));
}

TEST(Auto, Dispatch) {
    auto bip = complete_bipartite(2, 2);
    EXPECT_EQ(colour_auto(bip, 2).result->report.algorithm, Algorithm::bipartite);

    auto k5 = complete(5);
    EXPECT_EQ(colour_auto(k5, 2).result->report.algorithm, Algorithm::small_k);

    auto g45 = random_min_degree_graph({60, 45, false, 0, 5});
    if (g45.min_degree() == 45) {
        auto out = colour_auto(g45, 5);
        ASSERT_TRUE(out.result);
        EXPECT_EQ(out.result->report.algorithm, Algorithm::refined);
    }

    std::vector<Edge> e;
    auto g44 = complete(45);  // 44-regular
    auto none = colour_auto(g44, 5);
    EXPECT_FALSE(none.result);
    EXPECT_FALSE(none.reason.empty());
}

TEST(Auto, AlgorithmNames) {
    for (auto a : {Algorithm::bipartite, Algorithm::general, Algorithm::refined, Algorithm::small_k}) {
        EXPECT_EQ(parse_algorithm(algorithm_name(a)), a);
    }
    EXPECT_FALSE(parse_algorithm("auto"));
}
