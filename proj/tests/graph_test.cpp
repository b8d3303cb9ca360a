#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "majcol/error.hpp"
#include "majcol/graph.hpp"
#include "majcol/instances.hpp"
#include "majcol/majority.hpp"

using namespace majcol;

namespace {

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph::build(n, e);
}

void expect_closed_walk(const Graph& g, const std::vector<EdgeId>& walk) {
    ASSERT_FALSE(walk.empty());
    std::set<EdgeId> distinct(walk.begin(), walk.end());
    EXPECT_EQ(distinct.size(), walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Edge a = g.edge(walk[i]);
        const Edge b = g.edge(walk[(i + 1) % walk.size()]);
        EXPECT_TRUE(a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
    }
}

}  // namespace

TEST(Graph, BuildCycle) {
    auto g = cycle(4);
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
    EXPECT_EQ(g.incident(0)[0].edge, 0u);
    EXPECT_EQ(g.incident(0)[1].edge, 3u);
    EXPECT_EQ(g.other_end(3, 0), 3u);
}

TEST(Graph, RejectsBadEdges) {
    std::vector<Edge> loop{{0, 0}};
    EXPECT_THROW(Graph::build(2, loop), InputError);
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    try {
        Graph::build(3, dup);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos);
    }
    std::vector<Edge> range{{0, 3}};
    EXPECT_THROW(Graph::build(3, range), InputError);
}

TEST(Graph, Components) {
    std::vector<Edge> two{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    auto blocks = components(Graph::build(6, two));
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0], (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(blocks[1], (std::vector<Vertex>{3, 4, 5}));
    EXPECT_EQ(components(Graph::build(3, {})).size(), 3u);
    EXPECT_EQ(components(cycle(4)).size(), 1u);
}

TEST(Graph, Bipartition) {
    auto c4 = bipartition(cycle(4));
    ASSERT_TRUE(std::holds_alternative<Bipartition>(c4));
    const auto& side = std::get<Bipartition>(c4).side;
    EXPECT_EQ(side[0], side[2]);
    EXPECT_NE(side[0], side[1]);

    auto tri = bipartition(cycle(3));
    ASSERT_TRUE(std::holds_alternative<OddCycle>(tri));
    EXPECT_EQ(std::get<OddCycle>(tri).edges.size(), 3u);

    std::vector<Edge> pend{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}};
    auto p = bipartition(Graph::build(5, pend));
    ASSERT_TRUE(std::holds_alternative<Bipartition>(p));
    EXPECT_NE(std::get<Bipartition>(p).side[4], std::get<Bipartition>(p).side[0]);
}

TEST(Graph, OddCycleWitnessIsOddClosedWalk) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto g = random_min_degree_graph({12, 3, false, 0, rng()});
        auto r = bipartition(g);
        if (auto* odd = std::get_if<OddCycle>(&r)) {
            EXPECT_EQ(odd->edges.size() % 2, 1u);
            expect_closed_walk(g, odd->edges);
        } else {
            const auto& side = std::get<Bipartition>(r).side;
            for (const auto& e : g.edges()) EXPECT_NE(side[e.u], side[e.v]);
        }
    }
}

TEST(Graph, EulerianCircuit) {
    auto t = eulerian_circuit(cycle(3));
    EXPECT_EQ(t.edges.size(), 3u);
    std::vector<Edge> bowtie{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
    auto g = Graph::build(5, bowtie);
    auto c = eulerian_circuit(g);
    EXPECT_EQ(c.edges.size(), 6u);
    expect_closed_walk(g, c.edges);
    // Consecutive edges chain through a common vertex starting at c.start.
    Vertex at = c.start;
    for (EdgeId e : c.edges) {
        ASSERT_TRUE(g.edge(e).u == at || g.edge(e).v == at);
        at = g.other_end(e, at);
    }
    EXPECT_EQ(at, c.start);

    std::vector<Edge> path{{0, 1}, {1, 2}};
    EXPECT_THROW(eulerian_circuit(Graph::build(3, path)), PreconditionError);
    std::vector<Edge> split{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    EXPECT_THROW(eulerian_circuit(Graph::build(6, split)), PreconditionError);
}

TEST(Majority, CycleAlternating) {
    auto g = cycle(4);
    auto v = check_majority(g, {{1, 2, 1, 2}, 3}, 2);
    EXPECT_TRUE(v.pass);
    EXPECT_FALSE(v.witness);
    EXPECT_EQ(v.count(0, 1), 1u);
}

TEST(Majority, StarFailsAtLeaf) {
    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    auto v = check_majority(Graph::build(4, star), {{1, 2, 3}, 3}, 2);
    ASSERT_FALSE(v.pass);
    EXPECT_EQ(v.witness->vertex, 1u);  // the centre sees each colour once; leaves have cap 0
    EXPECT_EQ(v.witness->cap, 0u);
}

TEST(Majority, LowerBoundGraphWitness) {
    auto g = general_lower_bound(2);
    // Vertex 2 has degree 3: neighbours 0, 4, 5. Give two of its edges colour 1.
    std::vector<Colour> col(g.edge_count(), 3);
    std::size_t given = 0;
    for (const auto& inc : g.incident(2)) {
        if (given++ < 2) col[inc.edge] = 1;
    }
    auto v = check_majority(g, {col, 3}, 2);
    ASSERT_FALSE(v.pass);
    // First violation in (vertex, colour) order.
    Vertex first = g.vertex_count();
    for (Vertex x = 0; x < g.vertex_count() && first == g.vertex_count(); ++x) {
        for (Colour c = 1; c <= 3; ++c) {
            if (v.count(x, c) > g.degree(x) / 2) {
                first = x;
                break;
            }
        }
    }
    EXPECT_EQ(v.witness->vertex, first);
    EXPECT_EQ(v.witness->cap, g.degree(first) / 2);
}

TEST(Majority, CountsSumToDegree) {
    auto g = random_min_degree_graph({20, 5, false, 10, 3});
    std::vector<Colour> col(g.edge_count());
    for (EdgeId e = 0; e < col.size(); ++e) col[e] = 1 + e % 4;
    auto v = check_majority(g, {col, 4}, 2);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        std::size_t s = 0;
        for (Colour c = 1; c <= 4; ++c) s += v.count(x, c);
        EXPECT_EQ(s, g.degree(x));
    }
}

TEST(Majority, RejectsMalformedColourings) {
    auto g = cycle(3);
    EXPECT_THROW(check_majority(g, {{1, 2}, 3}, 2), InputError);
    EXPECT_THROW(check_majority(g, {{1, 2, 4}, 3}, 2), InputError);
    EXPECT_THROW(check_majority(g, {{1, 2, 0}, 3}, 2), InputError);
    EXPECT_THROW(check_majority(g, {{1, 2, 3}, 3}, 1), PreconditionError);
}
