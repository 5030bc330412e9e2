#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

struct LoadedGraph {
  SimpleGraph graph;
  std::optional<unsigned> color;  // from a `color <i>` line, if present
};

/// Reads a general simple graph. Accepted forms:
///   [color <i>] graph <n> <|E|> followed by 0-indexed `u v` lines, or
///   DIMACS: `c` comments, `p edge <n> <|E|>`, 1-indexed `e u v` lines,
///   or a bipartite edge list, which is read as its single-vertex-set view.
LoadedGraph read_simple_graph(std::istream& in);
LoadedGraph load_simple_graph(const std::string& path);

void write_simple_graph(std::ostream& out, const SimpleGraph& graph);

}  // namespace ramsey
