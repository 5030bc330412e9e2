#include "ramsey/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/text_io.hpp"

namespace ramsey {

namespace {

SimpleGraph checked_graph(std::size_t n, std::vector<Edge> edges, const LineReader& reader) {
  try {
    return SimpleGraph(n, edges);
  } catch (const StructureError& e) {
    throw ParseError(e.what(), reader.line_number());
  }
}

LoadedGraph read_dimacs(LineReader& reader, std::string first) {
  std::string line = std::move(first);
  std::size_t n = 0, declared = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  do {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header || tokens.size() != 4) reader.fail("expected a single 'p edge <n> <m>' line");
      n = parse_int<std::size_t>(tokens[2], reader, "vertex count");
      declared = parse_int<std::size_t>(tokens[3], reader, "edge count");
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) reader.fail("edge line before 'p' line");
      if (tokens.size() != 3) reader.fail("expected 'e u v'");
      const auto u = parse_int<std::size_t>(tokens[1], reader, "vertex");
      const auto v = parse_int<std::size_t>(tokens[2], reader, "vertex");
      if (u == 0 || v == 0 || u > n || v > n) reader.fail("DIMACS vertex out of range 1.." + std::to_string(n));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      reader.fail("unexpected DIMACS line");
    }
  } while (reader.next(line));
  if (!have_header) reader.fail("missing 'p edge' line");
  if (edges.size() != declared) {
    reader.fail("header declares " + std::to_string(declared) + " edges, file has " + std::to_string(edges.size()));
  }
  return {checked_graph(n, std::move(edges), reader), std::nullopt};
}

}  // namespace

LoadedGraph read_simple_graph(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream text(all);
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) reader.fail("empty graph file");
  auto tokens = split_tokens(line);

  if (tokens[0] == "bipartite") {
    std::istringstream again(all);
    return {parse_incidence(again, IncidenceFormat::edge_list, "input").to_simple_graph(), std::nullopt};
  }
  if (tokens[0] == "p" || tokens[0] == "c" || tokens[0] == "e") return read_dimacs(reader, line);

  std::optional<unsigned> color;
  if (tokens[0] == "color") {
    if (tokens.size() != 2) reader.fail("expected 'color <i>'");
    color = parse_int<unsigned>(tokens[1], reader, "colour");
    if (!reader.next(line)) reader.fail("missing 'graph <n> <|E|>' header");
    tokens = split_tokens(line);
  }
  if (tokens.size() != 3 || tokens[0] != "graph") reader.fail("expected header 'graph <n> <|E|>'");
  const auto n = parse_int<std::size_t>(tokens[1], reader, "vertex count");
  const auto declared = parse_int<std::size_t>(tokens[2], reader, "edge count");
  std::vector<Edge> edges;
  edges.reserve(declared);
  while (reader.next(line)) {
    tokens = split_tokens(line);
    if (tokens.size() != 2) reader.fail("expected 'u v'");
    const auto u = parse_int<std::size_t>(tokens[0], reader, "vertex");
    const auto v = parse_int<std::size_t>(tokens[1], reader, "vertex");
    if (u >= n || v >= n) reader.fail("vertex out of range [0," + std::to_string(n) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != declared) {
    reader.fail("header declares " + std::to_string(declared) + " edges, file has " + std::to_string(edges.size()));
  }
  return {checked_graph(n, std::move(edges), reader), color};
}

LoadedGraph load_simple_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_simple_graph(in);
}

void write_simple_graph(std::ostream& out, const SimpleGraph& graph) {
  out << "graph " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

}  // namespace ramsey
