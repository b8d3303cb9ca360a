#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "majcol/graph.hpp"

namespace majcol {

enum class Side : std::uint8_t { blue = 0, red = 1 };

/// Balanced 2-edge-colouring. Every vertex sees at most ceil(d/2) edges of
/// each side, except a component's bad vertex, which sees d/2 + 1 red and
/// d/2 - 1 blue edges. A component has a bad vertex only if all its degrees
/// are even and its edge count is odd.
struct Bicolouring {
    std::vector<Side> side;                      // per edge
    std::vector<std::optional<Vertex>> bad;      // per component, in components() order
    std::vector<std::vector<Vertex>> components; // components() of the split graph
};

/// Chooses the bad vertex of an all-even, odd-size component. Receives the
/// component's vertices (ascending); returns nullopt when no candidate is
/// allowed.
using BadVertexSelector = std::function<std::optional<Vertex>(const Graph&, std::span<const Vertex>)>;

/// Lowest-index vertex of the component.
BadVertexSelector any_bad_vertex();
/// Lowest-index vertex satisfying `allowed`.
BadVertexSelector first_allowed(std::function<bool(Vertex)> allowed);
/// Never allows a bad vertex; for callers whose hypotheses rule one out.
BadVertexSelector no_bad_vertex();

/// Thrown when a bad vertex is required but the selector allows none.
class SelectorExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per component: joins odd-degree vertices to an auxiliary vertex if there
/// are any, walks an Eulerian circuit and alternates red/blue along it. An
/// all-even odd-size component starts its circuit at the selected bad vertex
/// with red, so that vertex ends with the extra red edge.
Bicolouring balanced_bicolouring(const Graph& h, const BadVertexSelector& select = any_bad_vertex());

}  // namespace majcol
