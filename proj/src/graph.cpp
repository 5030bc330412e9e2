#include "ramsey/graph.hpp"

#include <algorithm>

#include "ramsey/error.hpp"

namespace ramsey {

const char* kind_name(Error::Kind kind) noexcept {
  switch (kind) {
    case Error::Kind::parameter: return "parameter error";
    case Error::Kind::structure: return "structure error";
    case Error::Kind::parse: return "parse error";
    case Error::Kind::precondition: return "precondition error";
    case Error::Kind::lookup: return "lookup error";
    case Error::Kind::resource: return "resource error";
    case Error::Kind::unsupported: return "unsupported";
    case Error::Kind::format: return "format error";
  }
  return "error";
}

std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw StructureError("self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw StructureError("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  }
  return edges;
}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges) {
  auto sorted = normalize_edges({edges.begin(), edges.end()});
  offsets_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : sorted) {
    if (v >= vertex_count) {
      throw StructureError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range for " +
                           std::to_string(vertex_count) + " vertices");
    }
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  targets_.resize(2 * sorted.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : sorted) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph(n, edges);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> position(vertex_count(), kInfinite);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      const Vertex j = position[w];
      if (j != kInfinite && i < j) sub.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return SimpleGraph(vertices.size(), sub);
}

SimpleGraph SimpleGraph::complement() const {
  std::vector<Edge> out;
  const auto n = vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    auto row = neighbors(u);
    auto it = row.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != row.end() && *it < v) ++it;
      if (it != row.end() && *it == v) continue;
      out.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, out);
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

}  // namespace ramsey
