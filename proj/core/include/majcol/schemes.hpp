#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "majcol/euler_split.hpp"
#include "majcol/graph.hpp"
#include "majcol/majority.hpp"
#include "majcol/rational.hpp"

namespace majcol {

enum class Algorithm { bipartite, general, refined, small_k };

/// "bipartite", "general", "refined", "small-k".
std::string algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Minimum-degree thresholds of the four schemes.
[[nodiscard]] std::size_t bipartite_threshold(unsigned k);
[[nodiscard]] std::size_t general_threshold(unsigned k);
[[nodiscard]] std::size_t small_k_threshold(unsigned k);
/// ceil((3k^2 + km + k) / 2) with n = floor(log2(k+1)), m = k + 1 - 2^n.
[[nodiscard]] std::size_t refined_threshold(unsigned k);

struct RefinedShape {
    unsigned n;
    unsigned m;
};
[[nodiscard]] RefinedShape refined_shape(unsigned k);

/// Weight of the i-th rounding round (1-based) for minimum degree delta:
/// (delta/k - 1) / (delta - (i-1)(delta/k - 2)).
Rational general_weight(std::size_t delta, unsigned k, unsigned i);

/// One application of the rounding lemma with a constant weight.
struct RoundRecord {
    Colour colour = 0;
    Rational weight;
    std::size_t edges_coloured = 0;
    std::size_t exceptional = 0;
    std::size_t max_class_degree = 0;
    std::size_t max_residual_degree = 0;
};

struct SchemeReport {
    Algorithm algorithm = Algorithm::bipartite;
    unsigned k = 0;
    std::size_t delta = 0;
    unsigned n = 0;  // refined only
    unsigned m = 0;  // refined only
    std::vector<Rational> alpha;
    std::vector<RoundRecord> rounds;
    // refined
    std::size_t rule_a_components = 0;
    std::size_t rule_a_max_vertices = 0;
    std::size_t special_vertices = 0;
    // small-k
    std::size_t reduced_vertices = 0;
    std::size_t reduced_edges = 0;
    std::size_t doublings = 0;
    std::vector<std::vector<std::size_t>> elimination_histories;
    MajorityVerdict verdict;
};

struct SchemeResult {
    EdgeColouring colouring;
    SchemeReport report;
};

/// Requires G bipartite with min degree >= k(k-1). Rounds z = 1/i for
/// i = k+1 down to 2 on the remaining graph; the leftover gets colour 1.
SchemeResult colour_bipartite(const Graph& g, unsigned k);

/// Requires min degree >= 2k^2. Rounds z = general_weight(delta, k, i) for
/// i = 1..k; the leftover gets colour k+1. Checks the per-round degree
/// bounds at every vertex.
SchemeResult colour_general_2k2(const Graph& g, unsigned k);

/// Requires min degree >= refined_threshold(k). Colours 1..m as in the
/// general scheme, then 2^n binary-vector colours by n levels of Euler
/// splits with special-vertex bookkeeping.
SchemeResult colour_refined(const Graph& g, unsigned k);

/// k in {2,3,4}, min degree >= k^2. Works on the reduction of G to degrees
/// in S_k and pulls the colouring back.
SchemeResult colour_small_k(const Graph& g, unsigned k);

/// Dispatches to the first applicable scheme: bipartite, small-k, refined,
/// general. Empty when no threshold is met.
struct AutoOutcome {
    std::optional<SchemeResult> result;
    std::string reason;  // why nothing applied
};
AutoOutcome colour_auto(const Graph& g, unsigned k);

/// Runs the named scheme.
SchemeResult colour_with(Algorithm a, const Graph& g, unsigned k);

/// Decides whether a monochromatic component needs attention. `cls` is the
/// class subgraph (all vertices of H, edges of one side), `side` its colour.
using BadComponentPredicate = std::function<bool(const Graph& cls, std::span<const Vertex> component, Side side)>;

/// Per-vertex caps on the number of edges of each side, indexed 2*v + side.
using SideCaps = std::vector<std::size_t>;

/// Recolours single edges of H until no monochromatic component satisfies
/// `bad`, keeping every side count within `caps`. Each step must lower the
/// number of bad components. Returns the count before each step and after
/// the last (so the history is strictly decreasing and ends in 0).
/// Throws InvariantViolation if no admissible decreasing step exists.
std::vector<std::size_t> eliminate_bad_components(const Graph& h, std::vector<Side>& side,
                                                  const BadComponentPredicate& bad, const SideCaps& caps);

/// Number of monochromatic components satisfying `bad`.
std::size_t count_bad_components(const Graph& h, std::span<const Side> side, const BadComponentPredicate& bad);

}  // namespace majcol
