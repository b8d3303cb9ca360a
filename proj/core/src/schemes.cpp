#include "majcol/schemes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "scheme_common.hpp"

namespace majcol {

namespace detail {

RoundRecord round_into(const Graph& g, std::vector<char>& remaining, const Rational& w, Colour colour,
                       EdgeColouring& out) {
    if (w < 0 || w > 1) throw InvariantViolation("round weight " + w.to_string() + " outside [0,1]");
    auto sub = edge_subgraph(g, remaining);
    auto rounded = round_constant(sub.graph, w);

    RoundRecord rec;
    rec.colour = colour;
    rec.weight = w;
    rec.exceptional = rounded.exceptional.size();
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
        if (rounded.x[e] != 1) continue;
        const EdgeId parent = sub.parent_edge[e];
        out.colours[parent] = colour;
        remaining[parent] = 0;
        ++rec.edges_coloured;
    }
    std::vector<std::size_t> cls(g.vertex_count(), 0), rest(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (remaining[e]) {
            ++rest[ed.u];
            ++rest[ed.v];
        } else if (out.colours[e] == colour) {
            ++cls[ed.u];
            ++cls[ed.v];
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        rec.max_class_degree = std::max(rec.max_class_degree, cls[v]);
        rec.max_residual_degree = std::max(rec.max_residual_degree, rest[v]);
    }
    return rec;
}

void check_round_bounds(const Graph& g, const EdgeColouring& c, std::span<const char> remaining, Colour class_colour,
                        unsigned i, std::size_t delta, unsigned k) {
    std::vector<std::int64_t> cls(g.vertex_count(), 0), rest(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (remaining[e]) {
            ++rest[ed.u];
            ++rest[ed.v];
        } else if (c.colours[e] == class_colour) {
            ++cls[ed.u];
            ++cls[ed.v];
        }
    }
    const Rational dl(static_cast<std::int64_t>(delta));
    const Rational shrink = dl - Rational(static_cast<std::int64_t>(i)) * (dl / Rational(k) - Rational(2));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = static_cast<std::int64_t>(g.degree(v));
        if (cls[v] * static_cast<std::int64_t>(k) > d) {
            throw InvariantViolation("round " + std::to_string(i) + ": vertex " + std::to_string(v) + " has " +
                                     std::to_string(cls[v]) + " edges of colour " + std::to_string(class_colour) +
                                     " with degree " + std::to_string(d));
        }
        // residual <= beta * shrink with beta = d / delta
        if (Rational(rest[v]) * dl > Rational(d) * shrink) {
            throw InvariantViolation("round " + std::to_string(i) + ": vertex " + std::to_string(v) +
                                     " keeps residual degree " + std::to_string(rest[v]) + " above " +
                                     (Rational(d) * shrink / dl).to_string());
        }
    }
}

void certify(const Graph& g, unsigned k, SchemeResult& result) {
    for (Colour c : result.colouring.colours) {
        if (c == 0) throw InvariantViolation(algorithm_name(result.report.algorithm) + ": edge left uncoloured");
    }
    result.report.verdict = check_majority(g, result.colouring, k);
    if (!result.report.verdict.pass) {
        const auto& w = *result.report.verdict.witness;
        throw InvariantViolation(algorithm_name(result.report.algorithm) + ": vertex " + std::to_string(w.vertex) +
                                 " has " + std::to_string(w.count) + " edges of colour " + std::to_string(w.colour) +
                                 ", cap " + std::to_string(w.cap));
    }
}

}  // namespace detail

using detail::require_k;
using detail::require_min_degree;

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::bipartite: return "bipartite";
        case Algorithm::general: return "general";
        case Algorithm::refined: return "refined";
        case Algorithm::small_k: return "small-k";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::bipartite, Algorithm::general, Algorithm::refined, Algorithm::small_k}) {
        if (algorithm_name(a) == name) return a;
    }
    return std::nullopt;
}

std::size_t bipartite_threshold(unsigned k) { return std::size_t{k} * (k - 1); }
std::size_t general_threshold(unsigned k) { return 2 * std::size_t{k} * k; }
std::size_t small_k_threshold(unsigned k) { return std::size_t{k} * k; }

RefinedShape refined_shape(unsigned k) {
    const unsigned n = std::bit_width(k + 1) - 1;
    return {n, k + 1 - (1u << n)};
}

std::size_t refined_threshold(unsigned k) {
    const auto [n, m] = refined_shape(k);
    const std::size_t twice = 3 * std::size_t{k} * k + std::size_t{k} * m + k;
    return (twice + 1) / 2;
}

Rational general_weight(std::size_t delta, unsigned k, unsigned i) {
    const Rational d(static_cast<std::int64_t>(delta));
    const Rational per = d / Rational(k);
    return (per - Rational(1)) / (d - Rational(static_cast<std::int64_t>(i) - 1) * (per - Rational(2)));
}

namespace {

SchemeResult empty_result(Algorithm a, const Graph& g, unsigned k) {
    SchemeResult r;
    r.report.algorithm = a;
    r.report.k = k;
    r.report.delta = g.min_degree();
    r.colouring.colour_count = k + 1;
    r.colouring.colours.assign(g.edge_count(), 0);
    return r;
}

/// Rounds colours 1..rounds with the general weights; returns the residual mask.
std::vector<char> general_rounds(const Graph& g, unsigned k, unsigned rounds, SchemeResult& r) {
    std::vector<char> remaining(g.edge_count(), 1);
    const std::size_t delta = r.report.delta;
    for (unsigned i = 1; i <= rounds; ++i) {
        const Rational w = general_weight(delta, k, i);
        r.report.alpha.push_back(w);
        r.report.rounds.push_back(detail::round_into(g, remaining, w, i, r.colouring));
        detail::check_round_bounds(g, r.colouring, remaining, i, i, delta, k);
    }
    return remaining;
}

}  // namespace

SchemeResult colour_bipartite(const Graph& g, unsigned k) {
    require_k(k, "colour_bipartite");
    if (!is_bipartite(g)) throw PreconditionError("colour_bipartite: graph is not bipartite");
    require_min_degree(g, bipartite_threshold(k), "colour_bipartite");

    auto r = empty_result(Algorithm::bipartite, g, k);
    std::vector<char> remaining(g.edge_count(), 1);
    for (unsigned i = k + 1; i >= 2; --i) {
        const Rational w(1, i);
        r.report.alpha.push_back(w);
        auto rec = detail::round_into(g, remaining, w, i, r.colouring);
        if (rec.exceptional != 0) throw InvariantViolation("colour_bipartite: exceptional vertex in a bipartite graph");
        r.report.rounds.push_back(rec);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (remaining[e]) r.colouring.colours[e] = 1;
    }
    detail::certify(g, k, r);
    return r;
}

SchemeResult colour_general_2k2(const Graph& g, unsigned k) {
    require_k(k, "colour_general_2k2");
    require_min_degree(g, general_threshold(k), "colour_general_2k2");

    auto r = empty_result(Algorithm::general, g, k);
    if (g.vertex_count() == 0) return r;
    auto remaining = general_rounds(g, k, k, r);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (remaining[e]) r.colouring.colours[e] = k + 1;
    }
    detail::certify(g, k, r);
    return r;
}

namespace {

/// A bit string of a given length; bits are read most significant first.
struct Prefix {
    unsigned length;
    std::uint32_t bits;

    friend bool operator==(const Prefix&, const Prefix&) = default;
};

bool has_prefix(Prefix whole, Prefix part) {
    return part.length <= whole.length && (whole.bits >> (whole.length - part.length)) == part.bits;
}

}  // namespace

SchemeResult colour_refined(const Graph& g, unsigned k) {
    require_k(k, "colour_refined");
    require_min_degree(g, refined_threshold(k), "colour_refined");
    const auto [n, m] = refined_shape(k);

    auto r = empty_result(Algorithm::refined, g, k);
    r.report.n = n;
    r.report.m = m;
    if (g.vertex_count() == 0) return r;
    const auto in_h = general_rounds(g, k, m, r);

    // H-edge state: prefix fixed so far, and whether all bits are final.
    std::vector<Prefix> code(g.edge_count(), Prefix{0, 0});
    std::vector<char> determined(g.edge_count(), 0);
    std::vector<char> by_rule_a(g.edge_count(), 0);
    std::vector<std::vector<Prefix>> special(g.vertex_count());

    auto special_under = [&](Vertex v, Prefix p) {
        return std::any_of(special[v].begin(), special[v].end(), [&](Prefix q) { return has_prefix(p, q); });
    };

    for (unsigned level = 1; level <= n; ++level) {
        const unsigned len = level - 1;
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            const Prefix p{len, bits};
            std::vector<char> keep(g.edge_count(), 0);
            bool any = false;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (in_h[e] && !determined[e] && code[e] == p) keep[e] = any = 1;
            }
            if (!any) continue;
            auto hp = edge_subgraph(g, keep);

            // Rule (a): components made entirely of special vertices.
            std::vector<char> split_keep(hp.graph.edge_count(), 1);
            for (const auto& comp : components(hp.graph)) {
                if (comp.size() == 1) continue;  // isolated vertex
                if (!std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return special_under(v, p); })) continue;
                if (comp.size() > n) {
                    throw InvariantViolation("colour_refined: rule (a) component of " + std::to_string(comp.size()) +
                                             " vertices exceeds n = " + std::to_string(n));
                }
                ++r.report.rule_a_components;
                r.report.rule_a_max_vertices = std::max(r.report.rule_a_max_vertices, comp.size());
                for (Vertex v : comp) {
                    for (const auto& inc : hp.graph.incident(v)) {
                        const EdgeId e = hp.parent_edge[inc.edge];
                        if (determined[e]) continue;
                        determined[e] = by_rule_a[e] = 1;
                        code[e] = {n, p.bits << (n - len)};
                        split_keep[inc.edge] = 0;
                    }
                }
            }

            // Rule (b): balanced split of the rest, bad vertex never special under p.
            auto rest = edge_subgraph(hp.graph, split_keep);
            Bicolouring split;
            try {
                split = balanced_bicolouring(rest.graph, first_allowed([&](Vertex v) { return !special_under(v, p); }));
            } catch (const SelectorExhausted& ex) {
                throw InvariantViolation(std::string("colour_refined: ") + ex.what());
            }
            for (EdgeId e = 0; e < rest.graph.edge_count(); ++e) {
                const EdgeId parent = hp.parent_edge[rest.parent_edge[e]];
                code[parent] = {level, (p.bits << 1) | (split.side[e] == Side::red ? 1u : 0u)};
            }
            for (const auto& bad : split.bad) {
                if (!bad) continue;
                const Prefix q{level, (p.bits << 1) | 1u};
                // At most once along any chain of prefixes; separate branches may repeat.
                if (special_under(*bad, q)) {
                    throw InvariantViolation("colour_refined: vertex special twice along one prefix chain");
                }
                special[*bad].push_back(q);
                ++r.report.special_vertices;
            }
        }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_h[e]) r.colouring.colours[e] = m + 1 + code[e].bits;
    }

    // Per-vertex bound for vector colours fed only by rule (b):
    // count <= (d_H - 1)/2^n + 3/2, i.e. 2^(n+1) count <= 2(d_H - 1) + 3 * 2^n.
    const std::size_t vectors = std::size_t{1} << n;
    std::vector<std::size_t> dh(g.vertex_count(), 0);
    std::vector<std::size_t> count(g.vertex_count() * vectors, 0);
    std::vector<char> touched_a(g.vertex_count() * vectors, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!in_h[e]) continue;
        for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
            ++dh[v];
            ++count[v * vectors + code[e].bits];
            if (by_rule_a[e]) touched_a[v * vectors + code[e].bits] = 1;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t a = 0; a < vectors; ++a) {
            if (touched_a[v * vectors + a] || dh[v] == 0) continue;
            const std::size_t c = count[v * vectors + a];
            if ((vectors * 2) * c > 2 * (dh[v] - 1) + 3 * vectors) {
                throw InvariantViolation("colour_refined: vertex " + std::to_string(v) + " has " + std::to_string(c) +
                                         " edges of vector colour " + std::to_string(a) + " with H-degree " +
                                         std::to_string(dh[v]));
            }
        }
    }
    detail::certify(g, k, r);
    return r;
}

SchemeResult colour_with(Algorithm a, const Graph& g, unsigned k) {
    switch (a) {
        case Algorithm::bipartite: return colour_bipartite(g, k);
        case Algorithm::general: return colour_general_2k2(g, k);
        case Algorithm::refined: return colour_refined(g, k);
        case Algorithm::small_k: return colour_small_k(g, k);
    }
    throw InputError("unknown algorithm");
}

AutoOutcome colour_auto(const Graph& g, unsigned k) {
    require_k(k, "colour_auto");
    using detail::min_degree_at_least;
    AutoOutcome out;
    if (min_degree_at_least(g, bipartite_threshold(k)) && is_bipartite(g)) {
        out.result = colour_bipartite(g, k);
    } else if (k <= 4 && min_degree_at_least(g, small_k_threshold(k))) {
        out.result = colour_small_k(g, k);
    } else if (min_degree_at_least(g, refined_threshold(k))) {
        out.result = colour_refined(g, k);
    } else if (min_degree_at_least(g, general_threshold(k))) {
        out.result = colour_general_2k2(g, k);
    } else {
        out.reason = "minimum degree " + std::to_string(g.min_degree()) + " is below every guaranteed threshold for k = " +
                     std::to_string(k) + (is_bipartite(g) ? "" : " (graph is not bipartite)");
    }
    return out;
}

}  // namespace majcol
