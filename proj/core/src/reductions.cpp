#include "majcol/reductions.hpp"

#include <algorithm>
#include <string>

#include "majcol/error.hpp"

namespace majcol {

std::vector<std::size_t> degree_set_S(unsigned k) {
    std::vector<std::size_t> out;
    for (std::size_t i = std::size_t{k} * k; i < 2 * std::size_t{k} * k; ++i) {
        if (i % k == k - 1) out.push_back(i);
    }
    return out;
}

bool in_degree_set_S(std::size_t degree, unsigned k) {
    const std::size_t k2 = std::size_t{k} * k;
    return degree >= k2 && degree < 2 * k2 && degree % k == k - 1;
}

SplitResult split_high_degree(const Graph& g, unsigned k) {
    if (k < 2) throw PreconditionError("split_high_degree: k must be at least 2");
    const std::size_t k2 = std::size_t{k} * k;
    if (g.vertex_count() > 0 && g.min_degree() < k2) {
        throw PreconditionError("split_high_degree: minimum degree " + std::to_string(g.min_degree()) + " < k^2 = " +
                                std::to_string(k2));
    }
    SplitResult out;
    out.trace.origin.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.trace.origin[v] = v;

    // New endpoint of edge e at vertex v.
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t d = g.degree(v);
        if (d < 2 * k2) continue;
        const std::size_t parts = d / k2 - 1;  // d = parts * k^2 + rest, k^2 <= rest < 2k^2
        const std::size_t rest = d - parts * k2;
        std::vector<Incidence> inc(g.incident(v).begin(), g.incident(v).end());
        std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
        const Vertex first_new = out.trace.origin.size();
        for (std::size_t p = 0; p < parts; ++p) out.trace.origin.push_back(v);
        for (std::size_t pos = rest; pos < d; ++pos) {
            const Vertex image = first_new + (pos - rest) / k2;
            Edge& e = edges[inc[pos].edge];
            (e.u == v ? e.u : e.v) = image;
        }
    }
    out.graph = Graph::build(out.trace.origin.size(), edges);
    out.trace.edge_bijection.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.trace.edge_bijection[e] = e;
    return out;
}

LiftResult raise_to_Sk(const Graph& g, unsigned k) {
    if (k < 2) throw PreconditionError("raise_to_Sk: k must be at least 2");
    if (k > 4) throw PreconditionError("raise_to_Sk: k > 4 would grow the graph by more than 2^3");
    const std::size_t k2 = std::size_t{k} * k;
    if (g.vertex_count() > 0 && (g.min_degree() < k2 || g.max_degree() >= 2 * k2)) {
        throw PreconditionError("raise_to_Sk: degrees must lie in [k^2, 2k^2)");
    }
    LiftResult out;
    out.trace.original_vertices = g.vertex_count();
    out.trace.embedding.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.trace.embedding[e] = e;

    Graph current = g;
    while (true) {
        bool all_in = true;
        for (Vertex v = 0; v < current.vertex_count() && all_in; ++v) all_in = in_degree_set_S(current.degree(v), k);
        if (all_in) break;
        if (out.trace.copies == k - 1) throw InvariantViolation("raise_to_Sk: more than k-1 doublings needed");
        const std::size_t offset = current.vertex_count();
        std::vector<Edge> edges = current.edges();
        for (const auto& e : current.edges()) edges.push_back({e.u + offset, e.v + offset});
        for (Vertex v = 0; v < offset; ++v) {
            if (!in_degree_set_S(current.degree(v), k)) edges.push_back({v, v + offset});
        }
        current = Graph::build(2 * offset, edges);
        ++out.trace.copies;
    }
    out.graph = std::move(current);
    return out;
}

EdgeColouring pull_back_colouring(const EdgeColouring& c, const SplitTrace& trace) {
    if (c.colours.size() != trace.edge_bijection.size()) {
        throw InputError("pull_back: colouring has " + std::to_string(c.colours.size()) + " edges, split trace " +
                         std::to_string(trace.edge_bijection.size()));
    }
    EdgeColouring out;
    out.colour_count = c.colour_count;
    out.colours.assign(c.colours.size(), 0);
    for (EdgeId e = 0; e < c.colours.size(); ++e) out.colours[trace.edge_bijection[e]] = c.colours[e];
    return out;
}

EdgeColouring pull_back_colouring(const EdgeColouring& c, const LiftTrace& trace) {
    EdgeColouring out;
    out.colour_count = c.colour_count;
    out.colours.reserve(trace.embedding.size());
    for (EdgeId e : trace.embedding) {
        if (e >= c.colours.size()) throw InputError("pull_back: lift embedding points past the colouring");
        out.colours.push_back(c.colours[e]);
    }
    return out;
}

Reduction reduce_to_Sk(const Graph& g, unsigned k) {
    auto split = split_high_degree(g, k);
    auto lift = raise_to_Sk(split.graph, k);
    return {std::move(lift.graph), std::move(split.trace), std::move(lift.trace)};
}

EdgeColouring pull_back_colouring(const EdgeColouring& c, const Reduction& reduction) {
    return pull_back_colouring(pull_back_colouring(c, reduction.lift), reduction.split);
}

}  // namespace majcol
