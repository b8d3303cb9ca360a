#include "majcol/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "majcol/error.hpp"

namespace majcol {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into tokens; false at EOF.
    bool next(std::vector<std::string_view>& tokens) {
        while (std::getline(in_, line_)) {
            ++number_;
            if (!line_.empty() && line_.back() == '\r') line_.pop_back();
            auto first = line_.find_first_not_of(" \t");
            if (first == std::string::npos || line_[first] == '#') continue;
            tokens.clear();
            std::string_view rest(line_);
            while (!rest.empty()) {
                auto b = rest.find_first_not_of(" \t");
                if (b == std::string_view::npos) break;
                rest.remove_prefix(b);
                auto e = rest.find_first_of(" \t");
                tokens.push_back(rest.substr(0, e));
                rest.remove_prefix(e == std::string_view::npos ? rest.size() : e);
            }
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw InputError("line " + std::to_string(number_) + ": " + message);
    }

    std::size_t number(std::string_view token, const char* what) const {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            fail(std::string("expected non-negative integer ") + what + ", got '" + std::string(token) + "'");
        }
        return value;
    }

    std::size_t line_number() const { return number_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t number_ = 0;
};

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw InputError("line 1: missing 'graph <n> <m>' header");
    if (tok.size() != 3 || tok[0] != "graph") reader.fail("expected header 'graph <n> <m>'");
    std::size_t n = reader.number(tok[1], "vertex count");
    std::size_t m = reader.number(tok[2], "edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(tok)) {
            throw InputError("line " + std::to_string(reader.line_number() + 1) + ": expected " + std::to_string(m) +
                             " edges, found " + std::to_string(i));
        }
        if (tok.size() != 2) reader.fail("expected '<u> <v>'");
        Edge e{reader.number(tok[0], "endpoint"), reader.number(tok[1], "endpoint")};
        if (e.u >= n || e.v >= n) reader.fail("endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (e.u == e.v) reader.fail("self-loop at vertex " + std::to_string(e.u));
        const auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (!seen.insert(key).second) {
            reader.fail("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        edges.push_back(e);
    }
    if (reader.next(tok)) reader.fail("unexpected content after " + std::to_string(m) + " edges");
    try {
        return Graph::build(n, edges);
    } catch (const InputError& err) {
        throw InputError(std::string("graph: ") + err.what());
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeColouring read_colouring(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw InputError("line 1: missing 'colouring <m> <c>' header");
    if (tok.size() != 3 || tok[0] != "colouring") reader.fail("expected header 'colouring <m> <c>'");
    std::size_t m = reader.number(tok[1], "edge count");
    std::size_t c = reader.number(tok[2], "colour count");
    if (c == 0) reader.fail("colour count must be positive");
    EdgeColouring out;
    out.colour_count = static_cast<Colour>(c);
    out.colours.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(tok)) {
            throw InputError("line " + std::to_string(reader.line_number() + 1) + ": expected " + std::to_string(m) +
                             " colour lines, found " + std::to_string(i));
        }
        if (tok.size() != 2) reader.fail("expected '<edge-index> <colour>'");
        std::size_t e = reader.number(tok[0], "edge index");
        std::size_t col = reader.number(tok[1], "colour");
        if (e >= m) reader.fail("edge index out of range");
        if (out.colours[e] != 0) reader.fail("edge " + std::to_string(e) + " coloured twice");
        if (col < 1 || col > c) reader.fail("colour out of range 1.." + std::to_string(c));
        out.colours[e] = static_cast<Colour>(col);
    }
    if (reader.next(tok)) reader.fail("unexpected content after " + std::to_string(m) + " colour lines");
    return out;
}

void write_colouring(std::ostream& out, const EdgeColouring& c) {
    out << "colouring " << c.colours.size() << ' ' << c.colour_count << '\n';
    for (std::size_t e = 0; e < c.colours.size(); ++e) out << e << ' ' << c.colours[e] << '\n';
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_graph(in);
    } catch (const InputError& err) {
        throw InputError(path + ": " + err.what());
    }
}

void save_graph(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

EdgeColouring load_colouring(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_colouring(in);
    } catch (const InputError& err) {
        throw InputError(path + ": " + err.what());
    }
}

void save_colouring(const std::string& path, const EdgeColouring& c) {
    auto out = open_out(path);
    write_colouring(out, c);
}

}  // namespace majcol
