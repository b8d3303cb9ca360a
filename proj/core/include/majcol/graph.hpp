#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace majcol {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbour;
    EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1 with indexed edges.
///
/// Adjacency lists are ordered by edge index, so every traversal that walks
/// them in order is deterministic.
class Graph {
public:
    Graph() = default;

    /// Validates and indexes the edge list. Throws InputError naming the
    /// offending pair on self-loops, duplicates or out-of-range endpoints.
    static Graph build(std::size_t vertex_count, std::span<const Edge> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[e]; }

    [[nodiscard]] std::span<const Incidence> incident(Vertex v) const {
        return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Zero for the empty graph.
    [[nodiscard]] std::size_t min_degree() const noexcept;
    [[nodiscard]] std::size_t max_degree() const noexcept;

    [[nodiscard]] Vertex other_end(EdgeId e, Vertex v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Incidence> incidence_;
};

/// A spanning subgraph (same vertex set) together with the parent edge index
/// of each of its edges.
struct EdgeSubgraph {
    Graph graph;
    std::vector<EdgeId> parent_edge;
};

/// Keeps the edges e of `g` with keep[e] != 0, preserving their relative order.
EdgeSubgraph edge_subgraph(const Graph& g, std::span<const char> keep);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Component id per vertex, consistent with the order of components().
std::vector<std::size_t> component_ids(const Graph& g);

struct Bipartition {
    std::vector<int> side;  // 0 or 1 per vertex
};

struct OddCycle {
    std::vector<EdgeId> edges;  // consecutive edges share a vertex and the walk closes
};

/// A proper 2-side labelling, or an odd cycle witnessing that none exists.
std::variant<Bipartition, OddCycle> bipartition(const Graph& g);

[[nodiscard]] inline bool is_bipartite(const Graph& g) {
    return std::holds_alternative<Bipartition>(bipartition(g));
}

struct Circuit {
    Vertex start = 0;
    std::vector<EdgeId> edges;
};

/// Eulerian circuit of a graph whose edges form one connected component and
/// whose degrees are all even (isolated vertices are ignored). Hierholzer's
/// algorithm, always leaving a vertex by its lowest-index unused edge.
/// Throws PreconditionError otherwise.
Circuit eulerian_circuit(const Graph& h);

namespace detail {

/// Hierholzer on an arbitrary edge list (multigraph allowed). The caller
/// guarantees every vertex incident to an edge has even degree and that
/// these edges are connected. Returns the edge sequence starting at `start`.
std::vector<std::size_t> hierholzer(std::size_t vertex_count, std::span<const Edge> edges, Vertex start);

}  // namespace detail

}  // namespace majcol
