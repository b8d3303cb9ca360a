#include "majcol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "majcol/error.hpp"

namespace majcol {

namespace {

std::string pair_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

Graph Graph::build(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g;
    g.edges_.assign(edges.begin(), edges.end());
    g.offsets_.assign(vertex_count + 1, 0);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw InputError("edge " + std::to_string(i) + " " + pair_text(e) + ": vertex index out of range (n=" +
                             std::to_string(vertex_count) + ")");
        }
        if (e.u == e.v) throw InputError("edge " + std::to_string(i) + " " + pair_text(e) + ": self-loop");
        auto lo = std::min(e.u, e.v);
        auto hi = std::max(e.u, e.v);
        if (!seen.insert((static_cast<std::uint64_t>(lo) << 32) | hi).second) {
            throw InputError("edge " + std::to_string(i) + " " + pair_text(e) + ": duplicate edge");
        }
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.incidence_.resize(2 * edges.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId i = 0; i < edges.size(); ++i) {
        g.incidence_[fill[edges[i].u]++] = {edges[i].v, i};
        g.incidence_[fill[edges[i].v]++] = {edges[i].u, i};
    }
    return g;
}

std::size_t Graph::min_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
    return best;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
}

EdgeSubgraph edge_subgraph(const Graph& g, std::span<const char> keep) {
    EdgeSubgraph out;
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (keep[e]) {
            kept.push_back(g.edge(e));
            out.parent_edge.push_back(e);
        }
    }
    out.graph = Graph::build(g.vertex_count(), kept);
    return out;
}

std::vector<std::size_t> component_ids(const Graph& g) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(g.vertex_count(), unset);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (id[s] != unset) continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(v)) {
                if (id[inc.neighbour] == unset) {
                    id[inc.neighbour] = next;
                    stack.push_back(inc.neighbour);
                }
            }
        }
        ++next;
    }
    return id;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    auto id = component_ids(g);
    std::size_t count = 0;
    for (auto c : id) count = std::max(count, c + 1);
    std::vector<std::vector<Vertex>> blocks(count);
    for (Vertex v = 0; v < g.vertex_count(); ++v) blocks[id[v]].push_back(v);
    return blocks;
}

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<EdgeId> parent_edge(n, 0);
    std::vector<std::size_t> depth(n, 0);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (const auto& inc : g.incident(v)) {
                Vertex w = inc.neighbour;
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    parent_edge[w] = inc.edge;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    // BFS tree paths from v and w up to their meeting point plus vw.
                    std::vector<EdgeId> up_v, up_w;
                    Vertex a = v, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            up_v.push_back(parent_edge[a]);
                            a = g.other_end(parent_edge[a], a);
                        } else {
                            up_w.push_back(parent_edge[b]);
                            b = g.other_end(parent_edge[b], b);
                        }
                    }
                    OddCycle cycle;
                    cycle.edges.push_back(inc.edge);  // v -> w
                    cycle.edges.insert(cycle.edges.end(), up_w.begin(), up_w.end());  // w -> meet
                    cycle.edges.insert(cycle.edges.end(), up_v.rbegin(), up_v.rend());  // meet -> v
                    return cycle;
                }
            }
        }
    }
    return Bipartition{std::move(side)};
}

namespace detail {

std::vector<std::size_t> hierholzer(std::size_t vertex_count, std::span<const Edge> edges, Vertex start) {
    std::vector<std::vector<std::size_t>> adj(vertex_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].u].push_back(i);
        adj[edges[i].v].push_back(i);
    }
    std::vector<std::size_t> next(vertex_count, 0);
    std::vector<char> used(edges.size(), 0);

    // Stack of (vertex, edge used to arrive); popped edges form the circuit in reverse.
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::pair<Vertex, std::size_t>> stack{{start, none}};
    std::vector<std::size_t> reversed;
    reversed.reserve(edges.size());
    while (!stack.empty()) {
        Vertex v = stack.back().first;
        auto& ptr = next[v];
        while (ptr < adj[v].size() && used[adj[v][ptr]]) ++ptr;
        if (ptr == adj[v].size()) {
            if (stack.back().second != none) reversed.push_back(stack.back().second);
            stack.pop_back();
            continue;
        }
        std::size_t e = adj[v][ptr];
        used[e] = 1;
        Vertex w = edges[e].u == v ? edges[e].v : edges[e].u;
        stack.emplace_back(w, e);
    }
    return {reversed.rbegin(), reversed.rend()};
}

}  // namespace detail

Circuit eulerian_circuit(const Graph& h) {
    if (h.edge_count() == 0) throw PreconditionError("eulerian_circuit: graph has no edges");
    Vertex start = h.vertex_count();
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) % 2 != 0) {
            throw PreconditionError("eulerian_circuit: vertex " + std::to_string(v) + " has odd degree " +
                                    std::to_string(h.degree(v)));
        }
        if (h.degree(v) > 0 && start == h.vertex_count()) start = v;
    }
    auto ids = component_ids(h);
    for (const auto& e : h.edges()) {
        if (ids[e.u] != ids[start]) throw PreconditionError("eulerian_circuit: edges are not connected");
    }
    Circuit c;
    c.start = start;
    c.edges = detail::hierholzer(h.vertex_count(), h.edges(), start);
    return c;
}

}  // namespace majcol
