#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "majcol/graph.hpp"
#include "majcol/majority.hpp"

namespace majcol {

/// K_{s,s} with s = k^2 - k, minus the edge (0, s). Sides are 0..s-1 and s..2s-1.
Graph bipartite_lower_bound(unsigned k);

/// Complete graph on 0..k^2 minus the Hamilton cycle 0,1,...,k^2,0, plus an
/// apex k^2+1 joined to every other vertex.
Graph general_lower_bound(unsigned k);

/// Seed mixer used to derive independent per-trial seeds.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform integer in [0, bound) by rejection; platform independent, unlike
/// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct RandomGraphOptions {
    std::size_t vertices = 0;
    std::size_t min_degree = 0;
    bool bipartite = false;     // sides 0..n/2-1 and n/2..n-1
    std::size_t extra_edges = 0;
    std::uint64_t seed = 0;
};

/// Random simple graph with minimum degree >= min_degree: min_degree rounds
/// of random matchings among vertices still below the target, a top-up pass,
/// then extra uniformly random non-edges. Deterministic in the seed. Edges are
/// listed with u < v in lexicographic order.
/// Throws PreconditionError if vertices <= min_degree (general) or a side
/// is smaller than min_degree (bipartite).
Graph random_min_degree_graph(const RandomGraphOptions& options);

struct SearchOutcome {
    std::optional<EdgeColouring> colouring;  // present iff found
    std::uint64_t node_count = 0;
    bool limit_hit = false;

    /// True when the search proved that no colouring exists.
    [[nodiscard]] bool infeasible() const { return !colouring && !limit_hit; }
};

inline constexpr std::uint64_t default_node_limit = 100'000'000;

/// Backtracking over edges ordered by non-increasing smaller endpoint degree
/// (ties by index), pruning on the caps floor(d/k). A new colour is only
/// tried if it is at most one above the largest colour used so far. Returns
/// at once with node_count 0 if some vertex has colour_count * floor(d/k) < d.
SearchOutcome exhaustive_search(const Graph& g, unsigned k, Colour colour_count,
                                std::uint64_t node_limit = default_node_limit);

}  // namespace majcol
