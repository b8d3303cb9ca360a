#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majcol/graph.hpp"
#include "majcol/rational.hpp"

namespace majcol {

/// Exact edge weights z(e) in [0, 1], indexed by edge.
using WeightAssignment = std::vector<Rational>;

/// A vertex whose rounded sum exceeds its weight sum by exactly one,
/// together with the odd cycle certifying it.
struct ExceptionalVertex {
    Vertex vertex;
    std::vector<EdgeId> cycle;  // closed walk through `vertex`, in traversal order

    friend bool operator==(const ExceptionalVertex&, const ExceptionalVertex&) = default;
};

struct RoundingStats {
    std::size_t kernel_steps = 0;
    std::size_t pendant_steps = 0;
    std::size_t isolated_edges = 0;
    std::size_t merged_cycle_pairs = 0;
    std::size_t odd_cycles = 0;
    std::size_t condition_ii_flips = 0;
};

/// 0/1 rounding x of a weight assignment z such that, writing X(v) and Z(v)
/// for the sums over edges at v:
///   (i)   Z(v) - 1 < X(v) <= Z(v) + 1 for every v;
///   (ii)  no edge uv has x(uv) = 0 while X(u) < Z(u) and X(v) < Z(v);
///   (iii) `exceptional` lists exactly the vertices with X(v) = Z(v) + 1, each
///         with an odd cycle on which every Z(u) is an integer; the cycles
///         are vertex-disjoint and no edge joins two of them.
struct RoundingResult {
    std::vector<std::uint8_t> x;
    std::vector<ExceptionalVertex> exceptional;
    RoundingStats stats;
};

/// Edges of a graph whose current value is still fractional.
struct SupportView {
    const Graph& graph;
    std::span<const char> active;
};

/// Nonzero edge coefficients, sorted by edge index.
struct Direction {
    std::vector<std::pair<EdgeId, Rational>> coefficients;
};

/// A direction in the kernel of the support's incidence matrix: the sum of
/// coefficients at every vertex is zero. Present iff the support component
/// of `start` has an even cycle or at least two cycles. Built from a DFS
/// tree: an even fundamental cycle, or two odd ones combined (sharing a path,
/// sharing one vertex, or disjoint and joined by a shortest path).
std::optional<Direction> find_kernel_direction(SupportView support, Vertex start);

/// For a support component that is a tree or has exactly one (odd) cycle, and
/// that has a leaf and a vertex of degree >= 2: a direction whose sums vanish
/// at every vertex of degree >= 2. Leaf-to-leaf path with alternating +-1, or
/// with a single leaf a path into the cycle with -+1/2 around the cycle.
/// Throws InvariantViolation if the component does not have that shape.
Direction pendant_direction(SupportView support, Vertex start);

/// Moves x along +direction or -direction as far as [0,1] allows, so that at
/// least one edge becomes integral. The sign producing more integral edges
/// wins, then the one whose first integral edge has the lower index, then +.
/// Returns the edges that became integral, ascending.
std::vector<EdgeId> saturate(std::vector<Rational>& x, const Direction& direction);

/// Rounds the remaining support, which must consist of vertex-disjoint odd
/// cycles. Bad cycles (every value exactly 1/2) joined by an edge of G are
/// made integral together; each remaining bad cycle gets one designated
/// vertex rounded up on both sides and is returned in the ledger. Other
/// cycles round to nearest, alternating along runs of 1/2 values starting
/// with "up" at the run's lowest edge index. Deactivates every cycle edge.
std::vector<ExceptionalVertex> resolve_cycles(const Graph& g, std::vector<Rational>& x, std::vector<char>& active,
                                              RoundingStats* stats = nullptr);

/// Sets x(uv) = 1 for every edge whose endpoints are both strictly below
/// their weight sums, scanning by edge index. Returns the number of flips.
std::size_t enforce_condition_ii(const Graph& g, std::span<const Rational> z, std::vector<std::uint8_t>& x);

/// Full pipeline. Throws InputError for weights outside [0,1] or of the wrong
/// length, InvariantViolation if the output fails certification.
RoundingResult round_weights(const Graph& g, std::span<const Rational> z);

/// round_weights with z(e) = weight on every edge.
RoundingResult round_constant(const Graph& g, const Rational& weight);

/// Re-checks conditions (i)-(iii) on a result. Empty string when valid,
/// otherwise a description of the first failure.
std::string certify_rounding(const Graph& g, std::span<const Rational> z, const RoundingResult& result);

/// Sum of values over the edges at each vertex.
std::vector<Rational> vertex_sums(const Graph& g, std::span<const Rational> values);

}  // namespace majcol
