#include <gtest/gtest.h>

#include <random>

#include "majcol/error.hpp"
#include "majcol/euler_split.hpp"
#include "majcol/instances.hpp"
#include "majcol/reductions.hpp"
#include "majcol/schemes.hpp"
#include "oracles.hpp"

using namespace majcol;
using majcol::testing::majority_ok;

namespace {

Graph hypercube(unsigned dim) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < (1u << dim); ++v)
        for (unsigned b = 0; b < dim; ++b)
            if (!(v & (1u << b))) e.push_back({v, v | (1u << b)});
    return Graph::build(1u << dim, e);
}

/// All class degrees even, odd edge count.
BadComponentPredicate even_odd_size() {
    return [](const Graph& cls, std::span<const Vertex> comp, Side) {
        std::size_t sum = 0;
        for (Vertex v : comp) {
            if (cls.degree(v) % 2) return false;
            sum += cls.degree(v);
        }
        return (sum / 2) % 2 == 1;
    };
}

}  // namespace

TEST(SmallK, HypercubeKTwo) {
    auto g = hypercube(4);
    auto r = colour_small_k(g, 2);
    EXPECT_TRUE(majority_ok(g, r.colouring.colours, 2));
    EXPECT_EQ(r.report.doublings, 1u);
}

TEST(SmallK, RandomKThreeAndFour) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 4; ++t) {
        auto g3 = random_min_degree_graph({16 + rng() % 10, 9, false, rng() % 5, rng()});
        EXPECT_TRUE(majority_ok(g3, colour_small_k(g3, 3).colouring.colours, 3));
        auto g4 = random_min_degree_graph({20 + rng() % 10, 16, false, rng() % 5, rng()});
        EXPECT_TRUE(majority_ok(g4, colour_small_k(g4, 4).colouring.colours, 4));
    }
}

TEST(SmallK, Preconditions) {
    EXPECT_THROW(colour_small_k(hypercube(3), 2), PreconditionError);
    EXPECT_THROW(colour_small_k(hypercube(6), 5), PreconditionError);
}

TEST(Elimination, NothingToDo) {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    auto g = Graph::build(4, e);
    std::vector<Side> side{Side::blue, Side::red, Side::blue, Side::red};
    auto before = side;
    SideCaps caps(8, 1);
    auto history = eliminate_bad_components(g, side, even_odd_size(), caps);
    EXPECT_EQ(history, (std::vector<std::size_t>{0}));
    EXPECT_EQ(side, before);
}

TEST(Elimination, BreaksOddEvenComponent) {
    // Blue triangle 0-1-2 plus red pendant edges so flips are possible.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}};
    auto g = Graph::build(6, e);
    std::vector<Side> side{Side::blue, Side::blue, Side::blue, Side::red, Side::red, Side::red};
    SideCaps caps(12, 2);
    auto history = eliminate_bad_components(g, side, even_odd_size(), caps);
    ASSERT_GE(history.size(), 2u);
    EXPECT_EQ(history.front(), 1u);
    EXPECT_EQ(history.back(), 0u);
    for (std::size_t i = 1; i < history.size(); ++i) EXPECT_LT(history[i], history[i - 1]);
    EXPECT_EQ(count_bad_components(g, side, even_odd_size()), 0u);
}

TEST(Elimination, ThrowsWhenStuck) {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
    auto g = Graph::build(3, e);
    std::vector<Side> side(3, Side::blue);
    SideCaps caps{2, 0, 2, 0, 2, 0};  // no red allowed anywhere
    EXPECT_THROW(eliminate_bad_components(g, side, even_odd_size(), caps), InvariantViolation);
}

TEST(Elimination, RandomSThreeGraphs) {
    // Degrees in S_3 via the reductions, Euler split, then elimination of
    // 6-regular odd-size monochromatic components.
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        auto g = random_min_degree_graph({14 + rng() % 8, 9, false, rng() % 8, rng()});
        auto r = reduce_to_Sk(g, 3).graph;
        auto split = balanced_bicolouring(r, any_bad_vertex());
        SideCaps caps(2 * r.vertex_count());
        for (Vertex v = 0; v < r.vertex_count(); ++v) caps[2 * v] = caps[2 * v + 1] = (r.degree(v) + 1) / 2;
        for (const auto& b : split.bad) {
            if (b) caps[2 * *b + 1] = r.degree(*b) / 2 + 1;
        }
        auto six = [](const Graph& cls, std::span<const Vertex> comp, Side) {
            std::size_t sum = 0;
            for (Vertex v : comp) {
                if (cls.degree(v) != 6) return false;
                sum += 6;
            }
            return (sum / 2) % 2 == 1;
        };
        const auto initial = count_bad_components(r, split.side, six);
        auto history = eliminate_bad_components(r, split.side, six, caps);
        EXPECT_EQ(history.front(), initial);
        EXPECT_EQ(history.back(), 0u);
        EXPECT_LE(history.size(), initial + 1);
    }
}
