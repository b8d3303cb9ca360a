#include "majcol/euler_split.hpp"

#include <algorithm>
#include <string>

namespace majcol {

BadVertexSelector any_bad_vertex() {
    return [](const Graph&, std::span<const Vertex> component) -> std::optional<Vertex> {
        if (component.empty()) return std::nullopt;
        return component.front();
    };
}

BadVertexSelector first_allowed(std::function<bool(Vertex)> allowed) {
    return [allowed = std::move(allowed)](const Graph&, std::span<const Vertex> component) -> std::optional<Vertex> {
        for (Vertex v : component) {
            if (allowed(v)) return v;
        }
        return std::nullopt;
    };
}

BadVertexSelector no_bad_vertex() {
    return [](const Graph&, std::span<const Vertex>) -> std::optional<Vertex> { return std::nullopt; };
}

Bicolouring balanced_bicolouring(const Graph& h, const BadVertexSelector& select) {
    Bicolouring out;
    out.side.assign(h.edge_count(), Side::blue);
    out.components = components(h);
    out.bad.assign(out.components.size(), std::nullopt);

    std::vector<std::size_t> local(h.vertex_count(), 0);
    std::vector<char> edge_taken(h.edge_count(), 0);
    for (std::size_t cid = 0; cid < out.components.size(); ++cid) {
        const auto& comp = out.components[cid];
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;

        // Local edge list: real edges first (ascending parent index), then auxiliary ones.
        std::vector<Edge> edges;
        std::vector<EdgeId> parent;
        std::vector<Vertex> odd;
        for (Vertex v : comp) {
            for (const auto& inc : h.incident(v)) {
                if (!edge_taken[inc.edge]) {
                    edge_taken[inc.edge] = 1;
                    parent.push_back(inc.edge);
                }
            }
            if (h.degree(v) % 2 != 0) odd.push_back(v);
        }
        if (parent.empty()) continue;
        std::sort(parent.begin(), parent.end());
        for (EdgeId e : parent) edges.push_back({local[h.edge(e).u], local[h.edge(e).v]});

        Vertex start = 0;
        std::size_t vertex_count = comp.size();
        if (!odd.empty()) {
            const Vertex aux = comp.size();
            ++vertex_count;
            for (Vertex v : odd) edges.push_back({local[v], aux});
            start = aux;
        } else if (parent.size() % 2 == 1) {
            auto chosen = select(h, comp);
            if (!chosen) {
                throw SelectorExhausted("balanced_bicolouring: component of vertex " + std::to_string(comp.front()) +
                                        " needs a bad vertex but none is allowed");
            }
            out.bad[cid] = *chosen;
            start = local[*chosen];
        }

        auto circuit = detail::hierholzer(vertex_count, edges, start);
        for (std::size_t pos = 0; pos < circuit.size(); ++pos) {
            std::size_t idx = circuit[pos];
            if (idx < parent.size()) out.side[parent[idx]] = pos % 2 == 0 ? Side::red : Side::blue;
        }
    }
    return out;
}

}  // namespace majcol
