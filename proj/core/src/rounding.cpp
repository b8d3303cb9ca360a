#include "majcol/rounding.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "majcol/error.hpp"

namespace majcol {

namespace {

const Rational kHalf{1, 2};

// A closed walk v0 -e0- v1 -e1- ... v_{L-1} -e_{L-1}- v0.
struct ClosedWalk {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

ClosedWalk rotate_to(const ClosedWalk& walk, Vertex start) {
    auto it = std::find(walk.vertices.begin(), walk.vertices.end(), start);
    auto shift = static_cast<std::size_t>(it - walk.vertices.begin());
    ClosedWalk out;
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
        out.vertices.push_back(walk.vertices[(shift + i) % walk.vertices.size()]);
        out.edges.push_back(walk.edges[(shift + i) % walk.edges.size()]);
    }
    return out;
}

// Alternating +1/-1 along an even closed walk, accumulated per edge.
Direction alternate_along(const std::vector<EdgeId>& walk_edges) {
    std::map<EdgeId, Rational> acc;
    std::int64_t sign = 1;
    for (EdgeId e : walk_edges) {
        acc[e] += Rational(sign);
        sign = -sign;
    }
    Direction d;
    for (auto& [e, c] : acc) {
        if (c != 0) d.coefficients.emplace_back(e, c);
    }
    return d;
}

void check_kernel(const Graph& g, const Direction& d, const char* where) {
    std::map<Vertex, Rational> sums;
    for (const auto& [e, c] : d.coefficients) {
        sums[g.edge(e).u] += c;
        sums[g.edge(e).v] += c;
    }
    for (const auto& [v, s] : sums) {
        if (s != 0) throw InvariantViolation(std::string(where) + ": nonzero vertex sum at " + std::to_string(v));
    }
    if (d.coefficients.empty()) throw InvariantViolation(std::string(where) + ": empty direction");
}

// Orders a 2-regular connected edge set into a closed walk.
ClosedWalk order_cycle(const Graph& g, const std::vector<EdgeId>& edge_set) {
    std::map<Vertex, std::vector<EdgeId>> at;
    for (EdgeId e : edge_set) {
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    }
    ClosedWalk walk;
    Vertex start = at.begin()->first;
    Vertex v = start;
    EdgeId prev = static_cast<EdgeId>(-1);
    do {
        const auto& inc = at[v];
        EdgeId e = inc[0] != prev ? inc[0] : inc[1];
        walk.vertices.push_back(v);
        walk.edges.push_back(e);
        prev = e;
        v = g.other_end(e, v);
    } while (v != start);
    if (walk.edges.size() != edge_set.size()) throw InvariantViolation("order_cycle: edge set is not a single cycle");
    return walk;
}

}  // namespace

std::optional<Direction> find_kernel_direction(SupportView support, Vertex start) {
    const Graph& g = support.graph;
    const std::size_t n = g.vertex_count();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 finished
    std::vector<EdgeId> parent(n, static_cast<EdgeId>(-1));
    std::vector<char> seen_edge(g.edge_count(), 0);

    // Closed walk from `top` down the tree to `bottom`, then back along `back`.
    auto tree_walk = [&](Vertex top, Vertex bottom, EdgeId back) {
        std::vector<EdgeId> down;
        for (Vertex v = bottom; v != top; v = g.other_end(parent[v], v)) down.push_back(parent[v]);
        std::reverse(down.begin(), down.end());
        ClosedWalk w;
        w.vertices.push_back(top);
        for (EdgeId e : down) {
            w.edges.push_back(e);
            w.vertices.push_back(g.other_end(e, w.vertices.back()));
        }
        w.edges.push_back(back);
        return w;
    };

    std::vector<ClosedWalk> odd;
    std::vector<std::pair<Vertex, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
        auto& [v, pos] = stack.back();
        auto inc = g.incident(v);
        if (pos == inc.size()) {
            state[v] = 2;
            stack.pop_back();
            continue;
        }
        const Incidence& it = inc[pos++];
        if (!support.active[it.edge] || it.edge == parent[v] || seen_edge[it.edge]) continue;
        seen_edge[it.edge] = 1;
        Vertex w = it.neighbour;
        if (state[w] == 0) {
            parent[w] = it.edge;
            state[w] = 1;
            stack.emplace_back(w, 0);
            continue;
        }
        // Back edge to an ancestor w.
        ClosedWalk c = tree_walk(w, v, it.edge);
        if (c.edges.size() % 2 == 0) {
            auto d = alternate_along(c.edges);
            check_kernel(g, d, "even cycle direction");
            return d;
        }
        odd.push_back(std::move(c));
        if (odd.size() < 2) continue;

        const ClosedWalk& c1 = odd[0];
        const ClosedWalk& c2 = odd[1];
        std::vector<char> in_c1(n, 0);
        for (Vertex u : c1.vertices) in_c1[u] = 1;
        std::vector<Vertex> shared;
        for (Vertex u : c2.vertices) {
            if (in_c1[u]) shared.push_back(u);
        }
        Direction d;
        if (shared.size() >= 2) {
            // The tree paths overlap in a path: the symmetric difference is an even cycle.
            std::vector<EdgeId> sym;
            std::vector<EdgeId> e1 = c1.edges, e2 = c2.edges;
            std::sort(e1.begin(), e1.end());
            std::sort(e2.begin(), e2.end());
            std::set_symmetric_difference(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(sym));
            d = alternate_along(order_cycle(g, sym).edges);
        } else if (shared.size() == 1) {
            // Figure eight through the shared vertex.
            auto w1 = rotate_to(c1, shared[0]);
            auto w2 = rotate_to(c2, shared[0]);
            std::vector<EdgeId> walk = w1.edges;
            walk.insert(walk.end(), w2.edges.begin(), w2.edges.end());
            d = alternate_along(walk);
        } else {
            // Disjoint: shortest support path from c1 to c2, walked there and back.
            std::vector<char> in_c2(n, 0);
            for (Vertex u : c2.vertices) in_c2[u] = 1;
            std::vector<EdgeId> via(n, static_cast<EdgeId>(-1));
            std::vector<char> reached(n, 0);
            std::vector<Vertex> queue;
            for (Vertex u : c1.vertices) {
                reached[u] = 1;
                queue.push_back(u);
            }
            Vertex hit = n;
            for (std::size_t head = 0; head < queue.size() && hit == n; ++head) {
                Vertex u = queue[head];
                for (const auto& nb : g.incident(u)) {
                    if (!support.active[nb.edge] || reached[nb.neighbour]) continue;
                    reached[nb.neighbour] = 1;
                    via[nb.neighbour] = nb.edge;
                    if (in_c2[nb.neighbour]) {
                        hit = nb.neighbour;
                        break;
                    }
                    queue.push_back(nb.neighbour);
                }
            }
            if (hit == n) throw InvariantViolation("kernel direction: odd cycles in one component are not connected");
            std::vector<EdgeId> path;  // from c1 to hit
            Vertex u = hit;
            while (!in_c1[u]) {
                path.push_back(via[u]);
                u = g.other_end(via[u], u);
            }
            std::reverse(path.begin(), path.end());
            auto w1 = rotate_to(c1, u);
            auto w2 = rotate_to(c2, hit);
            std::vector<EdgeId> walk = w1.edges;
            walk.insert(walk.end(), path.begin(), path.end());
            walk.insert(walk.end(), w2.edges.begin(), w2.edges.end());
            walk.insert(walk.end(), path.rbegin(), path.rend());
            d = alternate_along(walk);
        }
        check_kernel(g, d, "odd cycle pair direction");
        return d;
    }
    return std::nullopt;
}

Direction pendant_direction(SupportView support, Vertex start) {
    const Graph& g = support.graph;
    const std::size_t n = g.vertex_count();
    auto active_degree = [&](Vertex v) {
        std::size_t d = 0;
        for (const auto& inc : g.incident(v)) d += support.active[inc.edge] ? 1 : 0;
        return d;
    };
    auto active_incident = [&](Vertex v) {
        std::vector<Incidence> out;
        for (const auto& inc : g.incident(v)) {
            if (support.active[inc.edge]) out.push_back(inc);
        }
        return out;
    };

    std::vector<char> reached(n, 0);
    std::vector<Vertex> comp{start};
    reached[start] = 1;
    std::size_t edge_ends = 0;
    for (std::size_t head = 0; head < comp.size(); ++head) {
        for (const auto& inc : active_incident(comp[head])) {
            ++edge_ends;
            if (!reached[inc.neighbour]) {
                reached[inc.neighbour] = 1;
                comp.push_back(inc.neighbour);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    const std::size_t edges = edge_ends / 2;
    if (edges > comp.size()) throw InvariantViolation("pendant direction: component has more than one cycle");

    std::vector<Vertex> leaves;
    bool has_internal = false;
    for (Vertex v : comp) {
        auto d = active_degree(v);
        if (d == 1) leaves.push_back(v);
        if (d >= 2) has_internal = true;
    }
    if (leaves.empty() || !has_internal) {
        throw InvariantViolation("pendant direction: component needs a leaf and a vertex of degree >= 2");
    }

    Direction d;
    std::map<EdgeId, Rational> acc;
    if (leaves.size() >= 2) {
        // Leaf-to-leaf path: BFS from the smallest leaf to the nearest other leaf.
        Vertex from = leaves.front();
        std::vector<EdgeId> via(n, static_cast<EdgeId>(-1));
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue{from};
        seen[from] = 1;
        Vertex to = n;
        for (std::size_t head = 0; head < queue.size() && to == n; ++head) {
            for (const auto& inc : active_incident(queue[head])) {
                if (seen[inc.neighbour]) continue;
                seen[inc.neighbour] = 1;
                via[inc.neighbour] = inc.edge;
                if (active_degree(inc.neighbour) == 1) {
                    to = inc.neighbour;
                    break;
                }
                queue.push_back(inc.neighbour);
            }
        }
        std::vector<EdgeId> path;
        for (Vertex v = to; v != from; v = g.other_end(via[v], v)) path.push_back(via[v]);
        std::reverse(path.begin(), path.end());
        std::int64_t sign = 1;
        for (EdgeId e : path) {
            acc[e] += Rational(sign);
            sign = -sign;
        }
    } else {
        // Lollipop: the unique leaf hangs on a path into the odd cycle.
        Vertex v = leaves.front();
        EdgeId prev = static_cast<EdgeId>(-1);
        std::int64_t sign = 1;
        Rational last = 0;
        while (true) {
            auto inc = active_incident(v);
            if (inc.size() >= 3) break;
            const Incidence& next = inc[0].edge != prev ? inc[0] : inc[1];
            acc[next.edge] += Rational(sign);
            last = Rational(sign);
            sign = -sign;
            prev = next.edge;
            v = next.neighbour;
        }
        Vertex junction = v;
        if (active_degree(junction) != 3) throw InvariantViolation("pendant direction: malformed lollipop");
        Rational t = -last / Rational(2);
        // Walk the cycle from the junction along its lowest-index cycle edge.
        EdgeId first = static_cast<EdgeId>(-1);
        for (const auto& inc : active_incident(junction)) {
            if (inc.edge != prev) {
                first = inc.edge;
                break;
            }
        }
        EdgeId e = first;
        Vertex at = g.other_end(e, junction);
        acc[e] += t;
        while (at != junction) {
            t = -t;
            auto inc = active_incident(at);
            if (inc.size() != 2) throw InvariantViolation("pendant direction: cycle vertex of degree != 2");
            e = inc[0].edge != e ? inc[0].edge : inc[1].edge;
            acc[e] += t;
            at = g.other_end(e, at);
        }
    }
    for (auto& [e, c] : acc) {
        if (c != 0) d.coefficients.emplace_back(e, c);
    }

    // Sums must vanish at every vertex of degree >= 2.
    std::map<Vertex, Rational> sums;
    for (const auto& [e, c] : d.coefficients) {
        sums[g.edge(e).u] += c;
        sums[g.edge(e).v] += c;
    }
    for (const auto& [v, s] : sums) {
        if (s != 0 && active_degree(v) >= 2) {
            throw InvariantViolation("pendant direction: nonzero sum at internal vertex " + std::to_string(v));
        }
    }
    return d;
}

std::vector<EdgeId> saturate(std::vector<Rational>& x, const Direction& direction) {
    if (direction.coefficients.empty()) throw InvariantViolation("saturate: empty direction");
    struct Candidate {
        Rational step;
        std::vector<EdgeId> integral;
    };
    auto evaluate = [&](int sign) {
        Candidate c;
        bool first = true;
        for (const auto& [e, coef] : direction.coefficients) {
            Rational a = sign > 0 ? coef : -coef;
            Rational limit = a > 0 ? (Rational(1) - x[e]) / a : x[e] / (-a);
            if (first || limit < c.step) c.step = limit;
            first = false;
        }
        for (const auto& [e, coef] : direction.coefficients) {
            Rational moved = x[e] + (sign > 0 ? coef : -coef) * c.step;
            if (moved.is_integer()) c.integral.push_back(e);
        }
        return c;
    };
    Candidate plus = evaluate(+1);
    Candidate minus = evaluate(-1);
    bool use_plus = true;
    if (minus.integral.size() != plus.integral.size()) {
        use_plus = plus.integral.size() > minus.integral.size();
    } else if (!plus.integral.empty() && minus.integral.front() < plus.integral.front()) {
        use_plus = false;
    }
    const Candidate& pick = use_plus ? plus : minus;
    for (const auto& [e, coef] : direction.coefficients) {
        x[e] += (use_plus ? coef : -coef) * pick.step;
        if (x[e] < 0 || x[e] > 1) throw InvariantViolation("saturate: value left [0,1] on edge " + std::to_string(e));
    }
    return pick.integral;
}

std::vector<Rational> vertex_sums(const Graph& g, std::span<const Rational> values) {
    std::vector<Rational> sums(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        sums[g.edge(e).u] += values[e];
        sums[g.edge(e).v] += values[e];
    }
    return sums;
}

std::vector<ExceptionalVertex> resolve_cycles(const Graph& g, std::vector<Rational>& x, std::vector<char>& active,
                                              RoundingStats* stats) {
    const std::size_t n = g.vertex_count();
    constexpr auto none = static_cast<std::size_t>(-1);

    // Extract the cycles, each walked from its smallest vertex via its lower-index edge.
    std::vector<std::size_t> active_degree(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (active[e]) {
            ++active_degree[g.edge(e).u];
            ++active_degree[g.edge(e).v];
        }
    }
    std::vector<std::size_t> cycle_of(n, none);
    std::vector<ClosedWalk> cycles;
    for (Vertex s = 0; s < n; ++s) {
        if (active_degree[s] == 0 || cycle_of[s] != none) continue;
        ClosedWalk w;
        Vertex v = s;
        EdgeId prev = static_cast<EdgeId>(-1);
        do {
            if (active_degree[v] != 2) {
                throw InvariantViolation("resolve_cycles: support vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(active_degree[v]));
            }
            cycle_of[v] = cycles.size();
            EdgeId next = static_cast<EdgeId>(-1);
            for (const auto& inc : g.incident(v)) {
                if (active[inc.edge] && inc.edge != prev) {
                    next = inc.edge;
                    break;
                }
            }
            w.vertices.push_back(v);
            w.edges.push_back(next);
            prev = next;
            v = g.other_end(next, v);
        } while (v != s);
        if (w.edges.size() % 2 == 0) throw InvariantViolation("resolve_cycles: support cycle has even length");
        cycles.push_back(std::move(w));
    }
    if (stats) stats->odd_cycles += cycles.size();

    auto is_bad = [&](const ClosedWalk& c) {
        return std::all_of(c.edges.begin(), c.edges.end(), [&](EdgeId e) { return active[e] && x[e] == kHalf; });
    };
    std::vector<char> bad(cycles.size(), 0);
    for (std::size_t i = 0; i < cycles.size(); ++i) bad[i] = is_bad(cycles[i]);

    // Merge bad cycles joined by an edge, scanning joining edges by index.
    for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
        if (active[e0]) continue;
        auto ca = cycle_of[g.edge(e0).u];
        auto cb = cycle_of[g.edge(e0).v];
        if (ca == none || cb == none || ca == cb || !bad[ca] || !bad[cb]) continue;
        if (!x[e0].is_integer()) throw InvariantViolation("resolve_cycles: joining edge is fractional");
        // Coefficient 2 on e0, alternating -1/+1 around each cycle from e0's endpoint.
        const Rational shift = x[e0] == 0 ? Rational(1, 2) : Rational(-1, 2);
        x[e0] += Rational(2) * shift;
        for (auto [cid, end] : {std::pair{ca, g.edge(e0).u}, std::pair{cb, g.edge(e0).v}}) {
            auto w = rotate_to(cycles[cid], end);
            std::int64_t sign = -1;
            for (EdgeId e : w.edges) {
                x[e] += Rational(sign) * shift;
                sign = -sign;
                active[e] = 0;
            }
            bad[cid] = 0;
        }
        if (stats) ++stats->merged_cycle_pairs;
    }

    std::vector<ExceptionalVertex> ledger;
    for (std::size_t cid = 0; cid < cycles.size(); ++cid) {
        const ClosedWalk& c = cycles[cid];
        if (!active[c.edges.front()]) continue;  // merged
        const std::size_t len = c.edges.size();
        if (bad[cid]) {
            // c starts at its smallest vertex: up, down, ..., up.
            for (std::size_t i = 0; i < len; ++i) x[c.edges[i]] = Rational(i % 2 == 0 ? 1 : 0);
            ledger.push_back({c.vertices.front(), c.edges});
        } else {
            std::vector<char> half(len);
            for (std::size_t i = 0; i < len; ++i) half[i] = x[c.edges[i]] == kHalf;
            std::size_t anchor = 0;  // a position holding a non-1/2 value
            while (half[anchor]) ++anchor;
            std::vector<Rational> rounded(len);
            for (std::size_t step = 1; step <= len; ++step) {
                std::size_t i = (anchor + step) % len;
                if (!half[i]) {
                    rounded[i] = x[c.edges[i]] < kHalf ? 0 : 1;
                    continue;
                }
                std::size_t run_end = step;
                while (half[(anchor + run_end + 1) % len]) ++run_end;
                std::size_t lowest = step;
                for (std::size_t s = step; s <= run_end; ++s) {
                    if (c.edges[(anchor + s) % len] < c.edges[(anchor + lowest) % len]) lowest = s;
                }
                for (std::size_t s = step; s <= run_end; ++s) {
                    std::size_t gap = s > lowest ? s - lowest : lowest - s;
                    rounded[(anchor + s) % len] = gap % 2 == 0 ? 1 : 0;
                }
                step = run_end;
            }
            for (std::size_t i = 0; i < len; ++i) x[c.edges[i]] = rounded[i];
        }
        for (EdgeId e : c.edges) active[e] = 0;
    }
    return ledger;
}

std::size_t enforce_condition_ii(const Graph& g, std::span<const Rational> z, std::vector<std::uint8_t>& x) {
    auto zsum = vertex_sums(g, z);
    std::vector<std::int64_t> xsum(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        xsum[g.edge(e).u] += x[e];
        xsum[g.edge(e).v] += x[e];
    }
    std::size_t flips = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        if (x[e] == 0 && Rational(xsum[u]) < zsum[u] && Rational(xsum[v]) < zsum[v]) {
            x[e] = 1;
            ++xsum[u];
            ++xsum[v];
            ++flips;
        }
    }
    return flips;
}

RoundingResult round_weights(const Graph& g, std::span<const Rational> z) {
    if (z.size() != g.edge_count()) {
        throw InputError("round_weights: " + std::to_string(z.size()) + " weights for " +
                         std::to_string(g.edge_count()) + " edges");
    }
    for (EdgeId e = 0; e < z.size(); ++e) {
        if (z[e] < 0 || z[e] > 1) throw InputError("round_weights: weight " + z[e].to_string() + " of edge " +
                                                  std::to_string(e) + " outside [0,1]");
    }
    const std::size_t n = g.vertex_count();
    RoundingResult result;
    std::vector<Rational> x(z.begin(), z.end());
    std::vector<char> active(g.edge_count());
    std::vector<std::size_t> active_degree(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        active[e] = !x[e].is_integer();
        if (active[e]) {
            ++active_degree[g.edge(e).u];
            ++active_degree[g.edge(e).v];
        }
    }
    auto deactivate = [&](const std::vector<EdgeId>& edges) {
        for (EdgeId e : edges) {
            if (!active[e]) continue;
            active[e] = 0;
            --active_degree[g.edge(e).u];
            --active_degree[g.edge(e).v];
        }
    };
    auto mark_component = [&](Vertex s, std::vector<char>& done) {
        std::vector<Vertex> stack{s};
        done[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(v)) {
                if (active[inc.edge] && !done[inc.neighbour]) {
                    done[inc.neighbour] = 1;
                    stack.push_back(inc.neighbour);
                }
            }
        }
    };
    SupportView view{g, active};

    // Saturate kernel directions until every support component has at most one (odd) cycle.
    std::vector<char> done(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        while (!done[s] && active_degree[s] > 0) {
            auto dir = find_kernel_direction(view, s);
            if (!dir) {
                mark_component(s, done);
                break;
            }
            deactivate(saturate(x, *dir));
            ++result.stats.kernel_steps;
        }
    }

    // Pendant directions until components are odd cycles or isolated edges.
    std::fill(done.begin(), done.end(), 0);
    for (Vertex s = 0; s < n; ++s) {
        while (!done[s] && active_degree[s] > 0) {
            bool leaf = false, internal = false;
            {
                std::vector<char> seen(n, 0);
                std::vector<Vertex> stack{s};
                seen[s] = 1;
                while (!stack.empty()) {
                    Vertex v = stack.back();
                    stack.pop_back();
                    leaf |= active_degree[v] == 1;
                    internal |= active_degree[v] >= 2;
                    for (const auto& inc : g.incident(v)) {
                        if (active[inc.edge] && !seen[inc.neighbour]) {
                            seen[inc.neighbour] = 1;
                            stack.push_back(inc.neighbour);
                        }
                    }
                }
            }
            if (!(leaf && internal)) {
                mark_component(s, done);
                break;
            }
            deactivate(saturate(x, pendant_direction(view, s)));
            ++result.stats.pendant_steps;
        }
    }

    // Isolated support edges go to 1.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (active[e] && active_degree[g.edge(e).u] == 1 && active_degree[g.edge(e).v] == 1) {
            x[e] = 1;
            deactivate({e});
            ++result.stats.isolated_edges;
        }
    }

    result.exceptional = resolve_cycles(g, x, active, &result.stats);

    result.x.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!x[e].is_integer() || (x[e] != 0 && x[e] != 1)) {
            throw InvariantViolation("round_weights: edge " + std::to_string(e) + " left at " + x[e].to_string());
        }
        result.x[e] = x[e] == 1 ? 1 : 0;
    }
    result.stats.condition_ii_flips = enforce_condition_ii(g, z, result.x);

    if (auto failure = certify_rounding(g, z, result); !failure.empty()) {
        throw InvariantViolation("round_weights: certification failed: " + failure);
    }
    return result;
}

RoundingResult round_constant(const Graph& g, const Rational& weight) {
    WeightAssignment z(g.edge_count(), weight);
    return round_weights(g, z);
}

std::string certify_rounding(const Graph& g, std::span<const Rational> z, const RoundingResult& result) {
    const std::size_t n = g.vertex_count();
    if (result.x.size() != g.edge_count()) return "x has wrong length";
    auto zsum = vertex_sums(g, z);
    std::vector<std::int64_t> xsum(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (result.x[e] > 1) return "x(" + std::to_string(e) + ") not in {0,1}";
        xsum[g.edge(e).u] += result.x[e];
        xsum[g.edge(e).v] += result.x[e];
    }
    for (Vertex v = 0; v < n; ++v) {
        Rational xs(xsum[v]);
        if (!(zsum[v] - 1 < xs && xs <= zsum[v] + 1)) {
            return "(i) fails at vertex " + std::to_string(v) + ": X=" + xs.to_string() + " Z=" + zsum[v].to_string();
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        if (result.x[e] == 0 && Rational(xsum[u]) < zsum[u] && Rational(xsum[v]) < zsum[v]) {
            return "(ii) fails at edge " + std::to_string(e);
        }
    }
    std::vector<char> listed(n, 0);
    std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < result.exceptional.size(); ++i) {
        const auto& ex = result.exceptional[i];
        if (ex.vertex >= n) return "(iii) ledger vertex out of range";
        if (listed[ex.vertex]) return "(iii) vertex listed twice";
        listed[ex.vertex] = 1;
        if (ex.cycle.empty() || ex.cycle.size() % 2 == 0) return "(iii) ledger cycle is not odd";
        // Walk the cycle from its vertex.
        std::vector<Vertex> on;
        Vertex at = ex.vertex;
        for (EdgeId e : ex.cycle) {
            if (e >= g.edge_count()) return "(iii) ledger edge out of range";
            const auto [a, b] = g.edge(e);
            if (a != at && b != at) return "(iii) ledger cycle is not a walk";
            on.push_back(at);
            at = a == at ? b : a;
        }
        if (at != ex.vertex) return "(iii) ledger cycle does not close";
        for (Vertex u : on) {
            if (owner[u] != static_cast<std::size_t>(-1)) return "(iii) ledger cycles share or repeat a vertex";
            owner[u] = i;
            if (!zsum[u].is_integer()) return "(iii) non-integral weight sum on cycle vertex " + std::to_string(u);
        }
    }
    for (const auto& e : g.edges()) {
        auto a = owner[e.u], b = owner[e.v];
        if (a != static_cast<std::size_t>(-1) && b != static_cast<std::size_t>(-1) && a != b) {
            return "(iii) ledger cycles joined by an edge";
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        bool excess = Rational(xsum[v]) == zsum[v] + 1;
        if (excess != static_cast<bool>(listed[v])) {
            return "(iii) ledger mismatch at vertex " + std::to_string(v);
        }
    }
    return {};
}

}  // namespace majcol
