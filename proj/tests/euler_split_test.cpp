#include <gtest/gtest.h>

#include <random>

#include "majcol/euler_split.hpp"
#include "majcol/instances.hpp"

using namespace majcol;

namespace {

struct SideCount {
    std::vector<std::size_t> red, blue;
};

SideCount count_sides(const Graph& h, const Bicolouring& b) {
    SideCount c{std::vector<std::size_t>(h.vertex_count()), std::vector<std::size_t>(h.vertex_count())};
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto& bucket = b.side[e] == Side::red ? c.red : c.blue;
        ++bucket[h.edge(e).u];
        ++bucket[h.edge(e).v];
    }
    return c;
}

/// Checks the balance guarantee component by component.
void expect_balanced(const Graph& h, const Bicolouring& b) {
    auto c = count_sides(h, b);
    auto ids = component_ids(h);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const std::size_t d = h.degree(v);
        const auto& bad = b.bad[ids[v]];
        if (bad && *bad == v) {
            EXPECT_EQ(c.red[v], d / 2 + 1) << v;
            EXPECT_EQ(c.blue[v], d / 2 - 1) << v;
        } else {
            EXPECT_LE(c.red[v], (d + 1) / 2) << v;
            EXPECT_LE(c.blue[v], (d + 1) / 2) << v;
        }
    }
}

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph::build(n, e);
}

}  // namespace

TEST(EulerSplit, EvenCycleIsPerfectlyBalanced) {
    auto g = cycle(6);
    auto b = balanced_bicolouring(g);
    expect_balanced(g, b);
    EXPECT_FALSE(b.bad[0]);
}

TEST(EulerSplit, OddCycleNeedsBadVertex) {
    auto g = cycle(5);
    auto b = balanced_bicolouring(g);
    ASSERT_TRUE(b.bad[0]);
    EXPECT_EQ(*b.bad[0], 0u);
    expect_balanced(g, b);
}

TEST(EulerSplit, SelectorChoosesBadVertex) {
    auto g = cycle(5);
    auto b = balanced_bicolouring(g, first_allowed([](Vertex v) { return v == 3; }));
    ASSERT_TRUE(b.bad[0]);
    EXPECT_EQ(*b.bad[0], 3u);
    expect_balanced(g, b);
    EXPECT_THROW(balanced_bicolouring(g, no_bad_vertex()), SelectorExhausted);
    EXPECT_THROW(balanced_bicolouring(g, first_allowed([](Vertex) { return false; })), SelectorExhausted);
}

TEST(EulerSplit, OddDegreesNeverNeedBadVertex) {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}};
    auto g = Graph::build(4, e);
    auto b = balanced_bicolouring(g, no_bad_vertex());
    expect_balanced(g, b);
}

TEST(EulerSplit, RandomGraphsAreBalanced) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 6 + rng() % 20;
        auto g = random_min_degree_graph({n, 1 + rng() % 5, false, rng() % 10, rng()});
        auto b = balanced_bicolouring(g);
        expect_balanced(g, b);
        // Bad vertices only in all-even components with an odd edge count.
        auto comps = components(g);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::size_t sum = 0;
            bool even = true;
            for (Vertex v : comps[i]) {
                sum += g.degree(v);
                even = even && g.degree(v) % 2 == 0;
            }
            EXPECT_EQ(b.bad[i].has_value(), even && (sum / 2) % 2 == 1);
        }
    }
}
