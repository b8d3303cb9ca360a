#pragma once

#include <string>
#include <vector>

#include "majcol/error.hpp"
#include "majcol/rounding.hpp"
#include "majcol/schemes.hpp"

namespace majcol::detail {

inline void require_k(unsigned k, const char* who) {
    if (k < 2) throw PreconditionError(std::string(who) + ": k must be at least 2");
}

/// Minimum degree, treating the graph without vertices as unconstrained.
inline bool min_degree_at_least(const Graph& g, std::size_t bound) {
    return g.vertex_count() == 0 || g.min_degree() >= bound;
}

inline void require_min_degree(const Graph& g, std::size_t bound, const char* who) {
    if (!min_degree_at_least(g, bound)) {
        throw PreconditionError(std::string(who) + ": minimum degree " + std::to_string(g.min_degree()) +
                                " below required " + std::to_string(bound));
    }
}

/// Rounds the constant weight `w` on the edges still marked in `remaining`,
/// gives the edges with x = 1 colour `colour` and unmarks them.
RoundRecord round_into(const Graph& g, std::vector<char>& remaining, const Rational& w, Colour colour,
                       EdgeColouring& out);

/// Checks the per-round bounds class <= d/k and residual <= d(delta - i(delta/k - 2))/delta
/// at every vertex after round i. `class_colour` is the colour just assigned.
void check_round_bounds(const Graph& g, const EdgeColouring& c, std::span<const char> remaining, Colour class_colour,
                        unsigned i, std::size_t delta, unsigned k);

/// Verifies the finished colouring and stores the verdict.
void certify(const Graph& g, unsigned k, SchemeResult& result);

}  // namespace majcol::detail
