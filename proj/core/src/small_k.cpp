#include <algorithm>
#include <string>

#include "majcol/reductions.hpp"
#include "majcol/schemes.hpp"
#include "scheme_common.hpp"

namespace majcol {

namespace {

constexpr std::size_t side_index(Side s) { return s == Side::red ? 1 : 0; }
constexpr Side other(Side s) { return s == Side::red ? Side::blue : Side::red; }

struct ClassView {
    EdgeSubgraph sub;
    std::vector<std::vector<Vertex>> comps;
    std::vector<std::size_t> comp_id;
};

ClassView class_view(const Graph& h, std::span<const Side> side, Side s) {
    std::vector<char> keep(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) keep[e] = side[e] == s;
    ClassView view{edge_subgraph(h, keep), {}, {}};
    view.comps = components(view.sub.graph);
    view.comp_id = component_ids(view.sub.graph);
    return view;
}

std::size_t count_in(const ClassView& view, Side s, const BadComponentPredicate& bad) {
    std::size_t count = 0;
    for (const auto& comp : view.comps) {
        if (comp.size() > 1 && bad(view.sub.graph, comp, s)) ++count;
    }
    return count;
}

/// All class degrees even, an odd number of edges, and no vertex accepted by `allowed`.
BadComponentPredicate needs_forbidden_bad_vertex(std::function<bool(Vertex, std::size_t)> allowed) {
    return [allowed = std::move(allowed)](const Graph& cls, std::span<const Vertex> comp, Side) {
        std::size_t degree_sum = 0;
        for (Vertex v : comp) {
            const std::size_t d = cls.degree(v);
            if (d % 2 != 0 || allowed(v, d)) return false;
            degree_sum += d;
        }
        return (degree_sum / 2) % 2 == 1;
    };
}

BadVertexSelector class_selector(std::function<bool(Vertex, std::size_t)> allowed) {
    return [allowed = std::move(allowed)](const Graph& cls, std::span<const Vertex> comp) -> std::optional<Vertex> {
        for (Vertex v : comp) {
            if (allowed(v, cls.degree(v))) return v;
        }
        return std::nullopt;
    };
}

Bicolouring split_or_throw(const Graph& h, const BadVertexSelector& select, const char* stage) {
    try {
        return balanced_bicolouring(h, select);
    } catch (const SelectorExhausted& ex) {
        throw InvariantViolation(std::string("colour_small_k (") + stage + "): " + ex.what());
    }
}

/// Splits side `s` of H again and writes colours into `out` (indexed by the
/// edges of the reduced graph; `to_parent` maps H edges there).
void second_split(const Graph& h, std::span<const Side> side, Side s, const BadVertexSelector& select,
                  std::span<const EdgeId> to_parent, Colour blue_colour, Colour red_colour, EdgeColouring& out,
                  const char* stage) {
    auto view = class_view(h, side, s);
    auto split = split_or_throw(view.sub.graph, select, stage);
    for (EdgeId e = 0; e < view.sub.graph.edge_count(); ++e) {
        out.colours[to_parent[view.sub.parent_edge[e]]] = split.side[e] == Side::red ? red_colour : blue_colour;
    }
}

SideCaps half_caps(const Graph& h) {
    SideCaps caps(2 * h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) caps[2 * v] = caps[2 * v + 1] = (h.degree(v) + 1) / 2;
    return caps;
}

void small_k2(const Graph& r, EdgeColouring& c, SchemeReport& report) {
    std::vector<char> remaining(r.edge_count(), 1);
    report.alpha.push_back(Rational(1, 3));
    report.rounds.push_back(detail::round_into(r, remaining, Rational(1, 3), 3, c));
    auto h = edge_subgraph(r, remaining);
    auto split = split_or_throw(h.graph, no_bad_vertex(), "split");
    for (EdgeId e = 0; e < h.graph.edge_count(); ++e) {
        c.colours[h.parent_edge[e]] = split.side[e] == Side::red ? 2 : 1;
    }
}

void small_k3(const Graph& r, EdgeColouring& c, SchemeReport& report) {
    // Components that are 14-regular with an odd edge count are handled apart.
    const auto comps = components(r);
    const auto ids = component_ids(r);
    std::vector<char> aside_comp(comps.size(), 0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::size_t degree_sum = 0;
        bool regular = true;
        for (Vertex v : comps[i]) {
            regular = regular && r.degree(v) == 14;
            degree_sum += r.degree(v);
        }
        aside_comp[i] = regular && (degree_sum / 2) % 2 == 1;
    }
    std::vector<char> main_keep(r.edge_count()), aside_keep(r.edge_count());
    for (EdgeId e = 0; e < r.edge_count(); ++e) {
        aside_keep[e] = aside_comp[ids[r.edge(e).u]];
        main_keep[e] = !aside_keep[e];
    }

    auto gp = edge_subgraph(r, main_keep);
    auto split = split_or_throw(gp.graph, no_bad_vertex(), "first split");
    auto degree8 = [](Vertex, std::size_t d) { return d == 8; };
    report.elimination_histories.push_back(
        eliminate_bad_components(gp.graph, split.side, needs_forbidden_bad_vertex(degree8), half_caps(gp.graph)));
    second_split(gp.graph, split.side, Side::blue, class_selector(degree8), gp.parent_edge, 1, 2, c, "blue split");
    second_split(gp.graph, split.side, Side::red, class_selector(degree8), gp.parent_edge, 3, 4, c, "red split");

    auto aside = edge_subgraph(r, aside_keep);
    if (aside.graph.edge_count() == 0) return;
    auto aside_split = split_or_throw(aside.graph, any_bad_vertex(), "set-aside split");
    second_split(aside.graph, aside_split.side, Side::blue, no_bad_vertex(), aside.parent_edge, 1, 2, c,
                 "set-aside blue split");
    second_split(aside.graph, aside_split.side, Side::red, no_bad_vertex(), aside.parent_edge, 3, 4, c,
                 "set-aside red split");
}

void small_k4(const Graph& r, EdgeColouring& c, SchemeReport& report) {
    std::vector<char> remaining(r.edge_count(), 1);
    report.alpha.push_back(Rational(1, 5));
    report.rounds.push_back(detail::round_into(r, remaining, Rational(1, 5), 1, c));
    auto h = edge_subgraph(r, remaining);
    const Graph& hg = h.graph;

    auto split = split_or_throw(
        hg, first_allowed([&](Vertex v) { return hg.degree(v) == 18 || hg.degree(v) == 22; }), "first split");
    auto caps = half_caps(hg);
    for (const auto& bad : split.bad) {
        if (bad) caps[2 * *bad + side_index(Side::red)] = hg.degree(*bad) / 2 + 1;
    }
    auto allowed = [&r](Vertex v, std::size_t d) {
        return (r.degree(v) == 27 && d == 10) || (r.degree(v) == 31 && d == 12);
    };
    report.elimination_histories.push_back(
        eliminate_bad_components(hg, split.side, needs_forbidden_bad_vertex(allowed), caps));
    second_split(hg, split.side, Side::blue, class_selector(allowed), h.parent_edge, 2, 3, c, "blue split");
    second_split(hg, split.side, Side::red, class_selector(allowed), h.parent_edge, 4, 5, c, "red split");
}

}  // namespace

std::size_t count_bad_components(const Graph& h, std::span<const Side> side, const BadComponentPredicate& bad) {
    return count_in(class_view(h, side, Side::blue), Side::blue, bad) +
           count_in(class_view(h, side, Side::red), Side::red, bad);
}

std::vector<std::size_t> eliminate_bad_components(const Graph& h, std::vector<Side>& side,
                                                  const BadComponentPredicate& bad, const SideCaps& caps) {
    if (side.size() != h.edge_count() || caps.size() != 2 * h.vertex_count()) {
        throw InputError("eliminate_bad_components: size mismatch");
    }
    std::vector<std::size_t> load(2 * h.vertex_count(), 0);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        ++load[2 * h.edge(e).u + side_index(side[e])];
        ++load[2 * h.edge(e).v + side_index(side[e])];
    }
    for (std::size_t i = 0; i < load.size(); ++i) {
        if (load[i] > caps[i]) throw InputError("eliminate_bad_components: initial colouring exceeds its caps");
    }

    std::vector<std::size_t> history;
    while (true) {
        const ClassView views[2] = {class_view(h, side, Side::blue), class_view(h, side, Side::red)};
        const std::size_t current = count_in(views[0], Side::blue, bad) + count_in(views[1], Side::red, bad);
        history.push_back(current);
        if (current == 0) return history;

        // First bad component, blue before red.
        Side s = Side::blue;
        const std::vector<Vertex>* target = nullptr;
        for (Side cand : {Side::blue, Side::red}) {
            const auto& view = views[side_index(cand)];
            for (const auto& comp : view.comps) {
                if (comp.size() > 1 && bad(view.sub.graph, comp, cand)) {
                    s = cand;
                    target = &comp;
                    break;
                }
            }
            if (target) break;
        }
        const auto& own = views[side_index(s)];
        const auto& opposite = views[side_index(other(s))];

        // Moves edge e to the other side if caps allow and the count drops.
        auto try_flip = [&](EdgeId e) {
            const Edge& ed = h.edge(e);
            const std::size_t to = side_index(other(s));
            if (load[2 * ed.u + to] + 1 > caps[2 * ed.u + to] || load[2 * ed.v + to] + 1 > caps[2 * ed.v + to]) {
                return false;
            }
            side[e] = other(s);
            if (count_bad_components(h, side, bad) < current) {
                for (Vertex x : {ed.u, ed.v}) {
                    --load[2 * x + side_index(s)];
                    ++load[2 * x + to];
                }
                return true;
            }
            side[e] = s;
            return false;
        };

        Vertex v = target->front();
        for (Vertex x : *target) {
            if (own.sub.graph.degree(x) > own.sub.graph.degree(v)) v = x;
        }
        auto around = own.sub.graph.incident(v);
        bool done = false;
        if (around.size() >= 2) {
            const EdgeId e1 = own.sub.parent_edge[around[0].edge];
            const EdgeId e2 = own.sub.parent_edge[around[1].edge];
            const std::size_t home = opposite.comp_id[v];
            const bool u1_apart = opposite.comp_id[around[0].neighbour] != home;
            const bool u2_apart = opposite.comp_id[around[1].neighbour] != home;
            const EdgeId pick = u1_apart ? e1 : (u2_apart ? e2 : e1);
            done = try_flip(pick);
        }
        if (!done) {
            std::vector<EdgeId> candidates;
            for (Vertex x : *target) {
                for (const auto& inc : own.sub.graph.incident(x)) {
                    if (x < inc.neighbour) candidates.push_back(own.sub.parent_edge[inc.edge]);
                }
            }
            std::sort(candidates.begin(), candidates.end());
            done = std::any_of(candidates.begin(), candidates.end(), try_flip);
        }
        if (!done) {
            throw InvariantViolation("eliminate_bad_components: no recolouring lowers the count of " +
                                     std::to_string(current) + " bad components");
        }
    }
}

SchemeResult colour_small_k(const Graph& g, unsigned k) {
    detail::require_k(k, "colour_small_k");
    if (k > 4) throw PreconditionError("colour_small_k: k must be 2, 3 or 4");
    detail::require_min_degree(g, small_k_threshold(k), "colour_small_k");

    SchemeResult result;
    result.report.algorithm = Algorithm::small_k;
    result.report.k = k;
    result.report.delta = g.min_degree();
    result.colouring.colour_count = k + 1;
    if (g.vertex_count() == 0) return result;

    auto reduction = reduce_to_Sk(g, k);
    const Graph& r = reduction.graph;
    result.report.reduced_vertices = r.vertex_count();
    result.report.reduced_edges = r.edge_count();
    result.report.doublings = reduction.lift.copies;

    EdgeColouring reduced{std::vector<Colour>(r.edge_count(), 0), k + 1};
    if (k == 2) small_k2(r, reduced, result.report);
    if (k == 3) small_k3(r, reduced, result.report);
    if (k == 4) small_k4(r, reduced, result.report);
    if (std::find(reduced.colours.begin(), reduced.colours.end(), Colour{0}) != reduced.colours.end()) {
        throw InvariantViolation("colour_small_k: edge of the reduced graph left uncoloured");
    }
    auto on_reduced = check_majority(r, reduced, k);
    if (!on_reduced.pass) {
        const auto& w = *on_reduced.witness;
        throw InvariantViolation("colour_small_k: reduced-graph vertex " + std::to_string(w.vertex) + " has " +
                                 std::to_string(w.count) + " edges of colour " + std::to_string(w.colour) + ", cap " +
                                 std::to_string(w.cap));
    }
    result.colouring = pull_back_colouring(reduced, reduction);
    detail::certify(g, k, result);
    return result;
}

}  // namespace majcol
