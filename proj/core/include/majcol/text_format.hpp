#pragma once

#include <iosfwd>
#include <string>

#include "majcol/graph.hpp"
#include "majcol/majority.hpp"

namespace majcol {

// Graph format:
//   # optional comment lines
//   graph <n> <m>
//   <u> <v>          (m lines, 0-based)
//
// Colouring format:
//   colouring <m> <c>
//   <edge-index> <colour>   (m lines, colours 1-based)
//
// Readers throw InputError with a "line N:" prefix on malformed input.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

EdgeColouring read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const EdgeColouring& c);

Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
EdgeColouring load_colouring(const std::string& path);
void save_colouring(const std::string& path, const EdgeColouring& c);

}  // namespace majcol
