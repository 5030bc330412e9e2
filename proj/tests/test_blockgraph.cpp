#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "ramsey/blockgraph.hpp"
#include "ramsey/cycles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/pipeline.hpp"

using namespace ramsey;

namespace {

BipartiteIncidenceGraph certified_cage() {
  auto g = load_base("tutte12cage").graph;
  certify_polygon(g, 2, 2, 6);
  return g;
}

// Edges of one block under every assignment of its three neighbours, by
// enumeration of the 2^3 splits.
double expected_block_edges_cubic() {
  double total = 0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    const unsigned s = static_cast<unsigned>(__builtin_popcount(mask));
    total += s * (3 - s);
  }
  return total / 8;
}

}  // namespace

TEST_CASE("block construction on the 12-cage") {
  const auto base = certified_cage();
  const auto f = random_block_construction(base, 3);
  CHECK(f.vertex_count() == 63);
  CHECK(f.blocks().size() == 63);
  for (Vertex a = 0; a < 63; ++a) {
    const auto& blk = f.blocks()[a];
    std::vector<Vertex> both(blk.s_side);
    both.insert(both.end(), blk.t_side.begin(), blk.t_side.end());
    std::sort(both.begin(), both.end());
    const auto nb = base.neighbors_of_a(a);
    CHECK(both == std::vector<Vertex>(nb.begin(), nb.end()));
  }
  // Each edge belongs to exactly one block and sits across its split.
  for (const auto& [u, v] : f.edges()) {
    const auto a = f.block_of_edge(u, v);
    const auto& blk = f.blocks()[a];
    const bool us = std::binary_search(blk.s_side.begin(), blk.s_side.end(), u);
    const bool vs = std::binary_search(blk.s_side.begin(), blk.s_side.end(), v);
    CHECK(us != vs);
  }
  CHECK_THROWS_AS(f.block_of_edge(0, 0), LookupError);
  Vertex u = 0, v = 1;
  while (f.adjacent(u, v)) ++v;
  CHECK_THROWS_AS(f.block_of_edge(u, v), LookupError);

  // Thread count does not matter.
  CHECK(random_block_construction(base, 3, 4) == f);
  CHECK_FALSE(random_block_construction(base, 4) == f);
}

TEST_CASE("mean edge count matches the split enumeration") {
  const auto base = certified_cage();
  const double exact = 63 * expected_block_edges_cubic();
  CHECK(exact == doctest::Approx(94.5));
  double sum = 0;
  const int trials = 400;
  for (int seed = 0; seed < trials; ++seed) sum += random_block_construction(base, seed).edges().size();
  // Per-block variance 0.75, so sd of the mean is sqrt(63 * 0.75 / 400).
  CHECK(std::abs(sum / trials - exact) < 4 * std::sqrt(63 * 0.75 / trials));
}

TEST_CASE("forbidden odd cycles from the base girth") {
  CHECK(guaranteed_forbidden_odd_cycles(12) == std::vector<unsigned>{3, 5});
  CHECK(guaranteed_forbidden_odd_cycles(16) == std::vector<unsigned>{3, 5, 7});
  CHECK(guaranteed_forbidden_odd_cycles(6).empty());
  CHECK(guaranteed_forbidden_odd_cycles(8) == std::vector<unsigned>{3});
  CHECK(guaranteed_forbidden_odd_cycles(kInfinite) == std::vector<unsigned>{3, 5, 7});
}

TEST_CASE("preconditions and degenerate bases") {
  auto uncertified = load_base("tutte12cage").graph;
  CHECK_THROWS_AS(random_block_construction(uncertified, 1), PreconditionError);

  // A single line with no points: F is edgeless.
  BipartiteIncidenceGraph lonely("lonely", 2, 3, std::vector<std::vector<Vertex>>{{}, {}});
  PolygonCertificate cert;
  cert.valid = true;
  cert.girth = kInfinite;
  lonely.attach_certificate(cert);
  const auto f = random_block_construction(lonely, 1);
  CHECK(f.edges().empty());
  CHECK(f.vertex_count() == 3);

  // Two blocks sharing a pair emit the same edge.
  std::vector<Block> clash{{{0}, {1}}, {{1}, {0}}};
  CHECK_THROWS_AS(BlockGraph("x", 2, clash, 0), StructureError);
  std::vector<Block> overlap{{{0}, {0}}};
  CHECK_THROWS_AS(BlockGraph("x", 2, overlap, 0), StructureError);
}

TEST_CASE("block graph files round trip") {
  const auto f = random_block_construction(certified_cage(), 17);
  std::stringstream io;
  write_block_graph(io, f);
  const auto text = io.str();
  const auto back = read_block_graph(io);
  CHECK(back == f);
  std::stringstream again;
  write_block_graph(again, back);
  CHECK(again.str() == text);

  std::istringstream truncated("blockgraph 3 1 0\nbase x\n");
  CHECK_THROWS_AS(read_block_graph(truncated), ParseError);
  std::istringstream wrong_edges("blockgraph 2 1 0\nbase x\n0 : 0 | 1\nedges 1\n0 0\n");
  CHECK_THROWS(read_block_graph(wrong_edges));
}

TEST_CASE("no short odd cycles in F on the 12-cage") {
  const auto base = certified_cage();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_block_construction(base, seed);
    const auto d = oracle::dense(f.graph());
    CHECK_FALSE(oracle::has_cycle_of_length(d, 3));
    CHECK_FALSE(oracle::has_cycle_of_length(d, 5));
  }
}
