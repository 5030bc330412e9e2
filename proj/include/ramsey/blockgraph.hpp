#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ramsey/geometry.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Ordered split (S_a, T_a) of the neighbourhood of one A-vertex.
struct Block {
  std::vector<Vertex> s_side;
  std::vector<Vertex> t_side;

  std::size_t size() const noexcept { return s_side.size() + t_side.size(); }
  bool operator==(const Block&) const = default;
};

/// Graph F on vertex set B: the union over blocks of the complete bipartite
/// graphs S_a x T_a. The blocks are kept so membership queries are exact.
class BlockGraph {
 public:
  BlockGraph() = default;

  /// Derives the edge set from the blocks. Throws StructureError when two
  /// blocks produce the same edge (the base graph was not C4-free) or when
  /// a block's sides overlap.
  BlockGraph(std::string base_name, std::size_t vertex_count, std::vector<Block> blocks, std::uint64_t seed);

  const std::string& base_name() const noexcept { return base_name_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const SimpleGraph& graph() const noexcept { return graph_; }

  bool adjacent(Vertex u, Vertex v) const { return graph_.has_edge(u, v); }

  /// The unique A-vertex whose block put u and v on opposite sides.
  /// Throws LookupError for non-edges.
  Vertex block_of_edge(Vertex u, Vertex v) const;

  bool operator==(const BlockGraph& other) const {
    return base_name_ == other.base_name_ && seed_ == other.seed_ && blocks_ == other.blocks_ &&
           edges_ == other.edges_ && vertex_count() == other.vertex_count();
  }

 private:
  struct Membership {
    Vertex block;
    bool on_s_side;
  };

  std::string base_name_;
  std::vector<Block> blocks_;
  std::vector<Edge> edges_;
  std::uint64_t seed_ = 0;
  SimpleGraph graph_;
  std::vector<std::vector<Membership>> membership_;
};

/// Splits every neighbourhood N_G(a) by an independent fair coin per
/// neighbour (coin set: S_a, clear: T_a; either side may end up empty) and
/// joins the two sides completely. The coins of block a come from the
/// stream derive_seed(seed, Stage::block_partition, a), so the result is
/// the same for any thread count.
///
/// Requires a certificate on G with girth at least 6; a 4-cycle in G would
/// make two blocks emit the same edge.
BlockGraph random_block_construction(const BipartiteIncidenceGraph& base, std::uint64_t seed, unsigned threads = 1);

/// Odd j >= 3 with 2j < girth of the base graph: an odd j-cycle in F lifts
/// to a closed walk of length 2j in G. An acyclic base (kInfinite) forbids
/// every odd length; the list then stops at the longest searchable cycle.
std::vector<unsigned> guaranteed_forbidden_odd_cycles(std::uint32_t base_girth);

/// Text form:
///   blockgraph <|B|> <|A|> <seed>
///   base <name>
///   <a> : <S_a ...> | <T_a ...>      (one line per A-vertex, in order)
///   edges <|E|>
///   <u> <v>                          (sorted, u < v)
void write_block_graph(std::ostream& out, const BlockGraph& graph);
BlockGraph read_block_graph(std::istream& in);
BlockGraph load_block_graph(const std::string& path);

}  // namespace ramsey
