#include "majcol/instances.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "majcol/error.hpp"

namespace majcol {

Graph bipartite_lower_bound(unsigned k) {
    if (k < 2) throw PreconditionError("bipartite_lower_bound: k must be at least 2");
    const std::size_t s = std::size_t{k} * k - k;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < s; ++a) {
        for (Vertex b = s; b < 2 * s; ++b) {
            if (a != 0 || b != s) edges.push_back({a, b});
        }
    }
    return Graph::build(2 * s, edges);
}

Graph general_lower_bound(unsigned k) {
    if (k < 2) throw PreconditionError("general_lower_bound: k must be at least 2");
    const std::size_t n = std::size_t{k} * k + 1;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            const bool on_cycle = b == a + 1 || (a == 0 && b == n - 1);
            if (!on_cycle) edges.push_back({a, b});
        }
    }
    for (Vertex a = 0; a < n; ++a) edges.push_back({a, n});
    return Graph::build(n + 1, edges);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InputError("uniform_below: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

class Builder {
public:
    Builder(std::size_t n, bool bipartite) : n_(n), left_(bipartite ? n / 2 : 0), bipartite_(bipartite), degree_(n, 0) {}

    [[nodiscard]] bool allowed(Vertex a, Vertex b) const {
        if (a == b) return false;
        if (bipartite_ && (a < left_) == (b < left_)) return false;
        return !seen_.contains(key(a, b));
    }
    void add(Vertex a, Vertex b) {
        seen_.insert(key(a, b));
        edges_.push_back({std::min(a, b), std::max(a, b)});
        ++degree_[a];
        ++degree_[b];
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return degree_[v]; }
    [[nodiscard]] std::size_t size() const { return edges_.size(); }

    Graph finish() {
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& x, const Edge& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
        return Graph::build(n_, edges_);
    }

private:
    static std::uint64_t key(Vertex a, Vertex b) {
        return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    }

    std::size_t n_;
    std::size_t left_;
    bool bipartite_;
    std::vector<std::size_t> degree_;
    std::unordered_set<std::uint64_t> seen_;
    std::vector<Edge> edges_;
};

}  // namespace

Graph random_min_degree_graph(const RandomGraphOptions& options) {
    const std::size_t n = options.vertices;
    const std::size_t target = options.min_degree;
    if (options.bipartite) {
        if (n / 2 < target || n - n / 2 < target) {
            throw PreconditionError("random_min_degree_graph: bipartite sides of " + std::to_string(n / 2) + " and " +
                                    std::to_string(n - n / 2) + " vertices cannot reach degree " +
                                    std::to_string(target));
        }
    } else if (n <= target) {
        throw PreconditionError("random_min_degree_graph: " + std::to_string(n) +
                                " vertices cannot reach degree " + std::to_string(target));
    }
    if (n >= (std::size_t{1} << 32)) throw PreconditionError("random_min_degree_graph: too many vertices");

    std::mt19937_64 rng(options.seed);
    Builder b(n, options.bipartite);
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;

    for (std::size_t round = 0; round < target; ++round) {
        shuffle(order, rng);
        std::vector<char> used(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex v = order[i];
            if (used[v] || b.degree(v) >= target) continue;
            // Partner: first eligible vertex after v in the shuffled order.
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vertex u = order[j];
                if (!used[u] && b.degree(u) < target && b.allowed(v, u)) {
                    b.add(v, u);
                    used[v] = used[u] = 1;
                    break;
                }
            }
        }
    }

    // Top-up: join each deficient vertex to non-neighbours, lowest degree first.
    shuffle(order, rng);
    for (Vertex v : order) {
        if (b.degree(v) >= target) continue;
        std::vector<Vertex> cand;
        for (Vertex u : order) {
            if (b.allowed(v, u)) cand.push_back(u);
        }
        std::stable_sort(cand.begin(), cand.end(), [&](Vertex x, Vertex y) { return b.degree(x) < b.degree(y); });
        for (std::size_t i = 0; i < cand.size() && b.degree(v) < target; ++i) b.add(v, cand[i]);
    }

    for (std::size_t added = 0, attempts = 0; added < options.extra_edges && attempts < 64 * (options.extra_edges + 1);
         ++attempts) {
        const Vertex a = uniform_below(rng, n);
        const Vertex c = uniform_below(rng, n);
        if (b.allowed(a, c)) {
            b.add(a, c);
            ++added;
        }
    }
    return b.finish();
}

}  // namespace majcol
