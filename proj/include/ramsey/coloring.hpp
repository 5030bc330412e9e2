#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/blockgraph.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

using Color = unsigned;

/// Blowup vertex x stands for copy x mod r of base vertex x / r.
inline Vertex blowup_base(Vertex x, std::size_t r) { return static_cast<Vertex>(x / r); }

/// Adjacency in the r-blowup of F. Throws ParameterError for r == 0 or
/// vertices outside [0, r|F|).
bool blowup_adjacent(const BlockGraph& block_graph, std::size_t r, Vertex u, Vertex v);

inline constexpr std::size_t kDefaultVertexBudget = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultEdgeBudget = 50'000'000;

/// k copies F_1..F_k of the r-blowup F' placed on [0, N) by permutations:
/// (u, v) is in F_i iff (inverse_i[u], inverse_i[v]) is an edge of F'.
/// Edge colours follow the minimum-index rule, with k + 1 for edges in no
/// copy. Nothing of size N^2 is stored.
class ColoringFamily {
 public:
  /// Validates that every permutation is a bijection on [0, r|F|).
  ColoringFamily(std::shared_ptr<const BlockGraph> block_graph, std::size_t r,
                 std::vector<std::vector<Vertex>> permutations, std::uint64_t master_seed);

  const BlockGraph& block_graph() const noexcept { return *block_graph_; }
  std::shared_ptr<const BlockGraph> block_graph_ptr() const noexcept { return block_graph_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t n_vertices() const noexcept { return n_; }
  unsigned k() const noexcept { return static_cast<unsigned>(perms_.size()); }
  std::uint64_t master_seed() const noexcept { return seed_; }

  /// Image of blowup vertex x under copy i (0-based copy index).
  const std::vector<Vertex>& permutation(unsigned i) const { return perms_.at(i); }
  const std::vector<Vertex>& inverse(unsigned i) const { return inverses_.at(i); }

  /// Membership of (u, v) in F_{copy + 1}.
  bool in_copy(unsigned copy, Vertex u, Vertex v) const;

  /// Colour of the edge uv of K_N in {1, ..., k + 1}. O(k) adjacency probes.
  Color edge_color(Vertex u, Vertex v) const;

  /// Fault injection for tests: overwrites one entry of the stored inverse
  /// of copy i, so the oracle no longer matches the permutation.
  void corrupt_inverse_for_testing(unsigned copy, Vertex at, Vertex value) { inverses_.at(copy).at(at) = value; }

 private:
  std::shared_ptr<const BlockGraph> block_graph_;
  std::size_t r_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> perms_;
  std::vector<std::vector<Vertex>> inverses_;
  std::uint64_t seed_;
};

/// Draws k independent uniform permutations of [0, r|F|); copy i shuffles
/// with the stream derive_seed(seed, Stage::coloring_permutation, i).
ColoringFamily sample_coloring_family(std::shared_ptr<const BlockGraph> block_graph, std::size_t r, unsigned k,
                                      std::uint64_t seed, std::size_t vertex_budget = kDefaultVertexBudget);

/// Sorted edges (u < v, labels in [0, N)) of colour `color`, over all pairs
/// or over the pairs inside `subset`. Throws ResourceError when the pair
/// count exceeds edge_budget.
std::vector<Edge> materialize_color_class(const ColoringFamily& family, Color color,
                                          std::optional<std::span<const Vertex>> subset = std::nullopt,
                                          std::size_t edge_budget = kDefaultEdgeBudget, unsigned threads = 1);

/// Text form:
///   coloring <N> <r> <k> <seed>
///   meta version=1 block=<fingerprint>
///   <k lines of N images>
/// The fingerprint ties the file to the block graph it was sampled from.
inline constexpr unsigned kFamilyFormatVersion = 1;
void export_family(std::ostream& out, const ColoringFamily& family);
void export_family(const std::string& path, const ColoringFamily& family);
ColoringFamily import_family(std::istream& in, std::shared_ptr<const BlockGraph> block_graph);
ColoringFamily import_family(const std::string& path, std::shared_ptr<const BlockGraph> block_graph);

/// Hex digest identifying a block graph by its serialized form.
std::string block_graph_fingerprint(const BlockGraph& block_graph);

/// Materialized colour class in the edge-list form:
///   color <i>
///   graph <n> <|E|>
///   <u> <v>
void write_color_class(std::ostream& out, Color color, std::size_t vertex_count, std::span<const Edge> edges);

}  // namespace ramsey
