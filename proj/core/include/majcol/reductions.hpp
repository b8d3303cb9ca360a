#pragma once

#include <vector>

#include "majcol/graph.hpp"
#include "majcol/majority.hpp"

namespace majcol {

/// Degrees i with k^2 <= i < 2k^2 and i = k-1 (mod k).
std::vector<std::size_t> degree_set_S(unsigned k);
[[nodiscard]] bool in_degree_set_S(std::size_t degree, unsigned k);

/// Result of splitting every vertex of degree >= 2k^2. Edge e of the split
/// graph corresponds to edge edge_bijection[e] of the original.
struct SplitTrace {
    std::vector<Vertex> origin;          // split vertex -> original vertex
    std::vector<EdgeId> edge_bijection;  // split edge -> original edge
};

/// Result of repeatedly doubling the graph and joining each vertex whose
/// degree is outside S_k to its twin. The original graph sits in the first
/// copy with unchanged vertex and edge indices.
struct LiftTrace {
    std::size_t copies = 0;              // number of doubling rounds
    std::size_t original_vertices = 0;
    std::vector<EdgeId> embedding;       // original edge -> edge of the lifted graph
};

struct SplitResult {
    Graph graph;
    SplitTrace trace;
};

struct LiftResult {
    Graph graph;
    LiftTrace trace;
};

/// A vertex of degree n*k^2 + d with k^2 <= d < 2k^2 and n >= 1 becomes n+1
/// vertices: the original index keeps its d lowest-index neighbours and
/// each appended vertex takes the next k^2. Requires min degree >= k^2.
SplitResult split_high_degree(const Graph& g, unsigned k);

/// Requires k <= 4 (the graph grows by up to 2^(k-1)), min degree >= k^2 and
/// max degree < 2k^2. Afterwards every degree lies in S_k.
LiftResult raise_to_Sk(const Graph& g, unsigned k);

EdgeColouring pull_back_colouring(const EdgeColouring& c, const SplitTrace& trace);
EdgeColouring pull_back_colouring(const EdgeColouring& c, const LiftTrace& trace);

/// split_high_degree followed by raise_to_S.
struct Reduction {
    Graph graph;
    SplitTrace split;
    LiftTrace lift;
};

Reduction reduce_to_Sk(const Graph& g, unsigned k);
EdgeColouring pull_back_colouring(const EdgeColouring& c, const Reduction& reduction);

}  // namespace majcol
