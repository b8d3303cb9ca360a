#include "majcol/majority.hpp"

#include <string>

#include "majcol/error.hpp"

namespace majcol {

MajorityVerdict check_majority(const Graph& g, const EdgeColouring& c, unsigned k) {
    if (k < 2) throw PreconditionError("check_majority: k must be at least 2");
    if (c.colours.size() != g.edge_count()) {
        throw InputError("colouring covers " + std::to_string(c.colours.size()) + " edges, graph has " +
                         std::to_string(g.edge_count()));
    }
    if (c.colour_count == 0) throw InputError("colouring declares zero colours");

    MajorityVerdict verdict;
    verdict.colour_count = c.colour_count;
    verdict.counts.assign(g.vertex_count() * c.colour_count, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Colour col = c.colours[e];
        if (col < 1 || col > c.colour_count) {
            throw InputError("edge " + std::to_string(e) + " has colour " + std::to_string(col) + " outside 1.." +
                             std::to_string(c.colour_count));
        }
        ++verdict.counts[g.edge(e).u * c.colour_count + (col - 1)];
        ++verdict.counts[g.edge(e).v * c.colour_count + (col - 1)];
    }
    for (Vertex v = 0; v < g.vertex_count() && verdict.pass; ++v) {
        std::size_t cap = majority_cap(g.degree(v), k);
        for (Colour col = 1; col <= c.colour_count; ++col) {
            std::size_t count = verdict.count(v, col);
            if (count > cap) {
                verdict.pass = false;
                verdict.witness = MajorityWitness{v, col, count, cap};
                break;
            }
        }
    }
    return verdict;
}

}  // namespace majcol
