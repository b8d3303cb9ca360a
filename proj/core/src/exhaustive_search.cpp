#include <algorithm>
#include <numeric>
#include <vector>

#include "majcol/error.hpp"
#include "majcol/instances.hpp"

namespace majcol {

namespace {

class Search {
public:
    Search(const Graph& g, unsigned k, Colour colours, std::uint64_t limit)
        : g_(g), colours_(colours), limit_(limit), cap_(g.vertex_count()), count_(g.vertex_count() * colours, 0) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) cap_[v] = majority_cap(g.degree(v), k);
        order_.resize(g.edge_count());
        std::iota(order_.begin(), order_.end(), EdgeId{0});
        auto key = [&](EdgeId e) { return std::min(g.degree(g.edge(e).u), g.degree(g.edge(e).v)); };
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
        assignment_.assign(g.edge_count(), 0);
    }

    SearchOutcome run() {
        SearchOutcome out;
        if (descend(0, 0)) {
            out.colouring = EdgeColouring{assignment_, colours_};
        }
        out.node_count = nodes_;
        out.limit_hit = limit_hit_;
        return out;
    }

private:
    bool descend(std::size_t depth, Colour max_used) {
        if (depth == order_.size()) return true;
        const EdgeId e = order_[depth];
        const Vertex u = g_.edge(e).u;
        const Vertex v = g_.edge(e).v;
        const Colour top = std::min<Colour>(colours_, max_used + 1);
        for (Colour c = 1; c <= top; ++c) {
            auto& cu = count_[u * colours_ + c - 1];
            auto& cv = count_[v * colours_ + c - 1];
            if (cu >= cap_[u] || cv >= cap_[v]) continue;
            if (nodes_ >= limit_) {
                limit_hit_ = true;
                return false;
            }
            ++nodes_;
            ++cu;
            ++cv;
            assignment_[e] = c;
            if (descend(depth + 1, std::max(max_used, c))) return true;
            --cu;
            --cv;
            if (limit_hit_) return false;
        }
        assignment_[e] = 0;
        return false;
    }

    const Graph& g_;
    Colour colours_;
    std::uint64_t limit_;
    std::vector<std::size_t> cap_;
    std::vector<std::size_t> count_;
    std::vector<EdgeId> order_;
    std::vector<Colour> assignment_;
    std::uint64_t nodes_ = 0;
    bool limit_hit_ = false;
};

}  // namespace

SearchOutcome exhaustive_search(const Graph& g, unsigned k, Colour colour_count, std::uint64_t node_limit) {
    if (colour_count == 0) throw PreconditionError("exhaustive_search: colour count must be positive");
    if (k < 2) throw PreconditionError("exhaustive_search: k must be at least 2");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (std::size_t{colour_count} * majority_cap(g.degree(v), k) < g.degree(v)) return {};
    }
    auto out = Search(g, k, colour_count, node_limit).run();
    if (out.colouring && !check_majority(g, *out.colouring, k).pass) {
        throw InvariantViolation("exhaustive_search: returned colouring fails the majority check");
    }
    return out;
}

}  // namespace majcol
