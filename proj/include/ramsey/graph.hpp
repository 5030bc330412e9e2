#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sentinel for "no cycle" girth and "disconnected" diameter.
inline constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

/// Undirected simple graph in compressed sparse row form. Neighbour lists are
/// sorted, so adjacency queries are a binary search.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Builds from an edge list. Edges may be given in either orientation and
  /// in any order; self loops and repeated edges throw StructureError.
  SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Sorted edge list with u < v in every pair.
  std::vector<Edge> edges() const;

  SimpleGraph induced(std::span<const Vertex> vertices) const;
  SimpleGraph complement() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Canonical (min, max) order, sorted, duplicate-free edge list check.
std::vector<Edge> normalize_edges(std::vector<Edge> edges);

bool operator==(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace ramsey
