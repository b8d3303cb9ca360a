#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majcol/graph.hpp"

namespace majcol {

using Colour = std::uint32_t;  // 1-based

/// Total map edge -> colour in 1..colour_count.
struct EdgeColouring {
    std::vector<Colour> colours;
    Colour colour_count = 0;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;
};

struct MajorityWitness {
    Vertex vertex;
    Colour colour;
    std::size_t count;
    std::size_t cap;

    friend bool operator==(const MajorityWitness&, const MajorityWitness&) = default;
};

struct MajorityVerdict {
    bool pass = true;
    std::size_t colour_count = 0;
    /// counts[v * colour_count + (colour - 1)]
    std::vector<std::size_t> counts;
    /// First violation in (vertex, colour) order; present iff !pass.
    std::optional<MajorityWitness> witness;

    [[nodiscard]] std::size_t count(Vertex v, Colour c) const { return counts[v * colour_count + (c - 1)]; }
};

/// Per-colour cap at a vertex of degree d: floor(d / k).
[[nodiscard]] constexpr std::size_t majority_cap(std::size_t degree, unsigned k) { return degree / k; }

/// Checks that every colour appears at most floor(d(v)/k) times at every v.
/// Throws InputError if the colouring is not total or uses an out-of-range
/// colour, and PreconditionError if k < 2.
MajorityVerdict check_majority(const Graph& g, const EdgeColouring& c, unsigned k);

}  // namespace majcol
