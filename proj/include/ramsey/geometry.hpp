#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Outcome of checking a bipartite graph against the generalized polygon
/// axioms for order (s, t) and the given gonality n.
struct PolygonCertificate {
  unsigned s = 0;
  unsigned t = 0;
  unsigned gonality = 0;
  std::uint32_t girth = kInfinite;
  std::uint32_t diameter = kInfinite;
  bool degree_regular = false;
  bool counts_match = false;
  bool valid = false;
  std::string reason;  // empty when valid
};

/// Bipartite incidence graph G = A ∪ B. A is the high-degree side (points
/// of a polygon of order (s, t), each on t+1 lines); B holds the lines.
class BipartiteIncidenceGraph {
 public:
  BipartiteIncidenceGraph() = default;

  /// adjacency[a] lists the B-neighbours of A-vertex a. Lists are sorted on
  /// construction; duplicates and out-of-range indices throw StructureError.
  BipartiteIncidenceGraph(std::string name, std::size_t part_a_size, std::size_t part_b_size,
                          std::vector<std::vector<Vertex>> adjacency, std::optional<unsigned> q = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::optional<unsigned> q() const noexcept { return q_; }
  std::size_t part_a_size() const noexcept { return a_adj_.size(); }
  std::size_t part_b_size() const noexcept { return b_adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors_of_a(Vertex a) const { return a_adj_[a]; }
  std::span<const Vertex> neighbors_of_b(Vertex b) const { return b_adj_[b]; }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return a_adj_; }

  /// Single-vertex-set view: A-vertex a is a, B-vertex b is |A| + b.
  SimpleGraph to_simple_graph() const;

  /// Swaps the roles of A and B. Drops any attached certificate.
  BipartiteIncidenceGraph transposed() const;

  const std::optional<PolygonCertificate>& certificate() const noexcept { return certificate_; }
  void attach_certificate(PolygonCertificate cert) { certificate_ = std::move(cert); }

 private:
  std::string name_;
  std::optional<unsigned> q_;
  std::vector<std::vector<Vertex>> a_adj_;
  std::vector<std::vector<Vertex>> b_adj_;
  std::size_t edge_count_ = 0;
  std::optional<PolygonCertificate> certificate_;
};

/// Point-line incidence graph of PG(2, q) for prime powers q <= 101.
/// A holds the points, B the lines, both of size q^2 + q + 1.
BipartiteIncidenceGraph build_projective_plane_incidence(unsigned q);

/// Cubic Hamiltonian graph in LCF notation: a cycle 0..L-1 with chords
/// i -> i + offsets[i mod len] (mod L), L = len * repeats. The bipartition
/// comes from 2-colouring with vertex 0 on side A; each side keeps the
/// cycle order of its vertices.
BipartiteIncidenceGraph build_from_lcf(std::span<const int> offsets, unsigned repeats, std::string name = "lcf");

/// LCF data file: `lcf <repeats>` followed by the offsets (whitespace
/// separated, may span lines). `#` starts a comment.
BipartiteIncidenceGraph load_lcf(const std::string& path);
BipartiteIncidenceGraph parse_lcf(std::istream& in, std::string name);

enum class IncidenceFormat { edge_list, adjacency_list };
IncidenceFormat parse_incidence_format(const std::string& text);

/// Edge list: `bipartite <|A|> <|B|> <|E|>` then one `a b` pair per line.
/// Adjacency list: `adjacency <|A|> <|B|>` then one line per A-vertex, in
/// order, holding its B-neighbours. Errors carry the offending line.
BipartiteIncidenceGraph load_incidence(const std::string& path, IncidenceFormat format, bool transpose = false);
BipartiteIncidenceGraph parse_incidence(std::istream& in, IncidenceFormat format, std::string name,
                                        bool transpose = false);
void write_incidence(std::ostream& out, const BipartiteIncidenceGraph& graph, IncidenceFormat format);

/// Number of points and lines of a generalized n-gon of order (s, t), when
/// the standard count identity applies.
struct PolygonCounts {
  std::uint64_t points;
  std::uint64_t lines;
};
std::optional<PolygonCounts> polygon_counts(unsigned s, unsigned t, unsigned gonality);

/// Computes exact girth and diameter and checks biregularity and counts.
/// Pure; see certify_polygon for the attaching variant.
PolygonCertificate compute_polygon_certificate(const BipartiteIncidenceGraph& graph, unsigned s, unsigned t,
                                               unsigned gonality, unsigned threads = 1);

/// compute_polygon_certificate followed by attaching the result to graph.
PolygonCertificate certify_polygon(BipartiteIncidenceGraph& graph, unsigned s, unsigned t, unsigned gonality,
                                   unsigned threads = 1);

}  // namespace ramsey
