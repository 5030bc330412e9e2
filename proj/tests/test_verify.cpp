#include <doctest.h>

#include <memory>
#include <numeric>

#include "oracles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/pipeline.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), Vertex{0});
  return id;
}

BipartiteIncidenceGraph certified_cage() {
  auto g = load_base("tutte12cage").graph;
  certify_polygon(g, 2, 2, 6);
  return g;
}

}  // namespace

TEST_CASE("structured graphs against the oracles") {
  const auto p = oracle::petersen();
  CHECK(independence_number(p).lower == 4);
  CHECK(independence_number(p).exact());
  CHECK(max_clique(p).lower == 2);
  CHECK(find_cycle_of_length(p, 5).found());
  CHECK(find_cycle_of_length(p, 6).found());
  CHECK(find_cycle_of_length(p, 7, CycleSearchMode::exhaustive_absence).found() ==
        oracle::has_cycle_of_length(oracle::dense(p), 7));

  for (std::size_t n = 1; n <= 9; ++n) {
    const auto k = SimpleGraph::complete(n);
    CHECK(max_clique(k).lower == n);
    CHECK(independence_number(k).lower == 1);
  }
  std::vector<Edge> kab;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 6; b < 13; ++b) kab.emplace_back(a, b);
  const SimpleGraph bip(13, kab);
  CHECK(max_clique(bip).lower == 2);
  CHECK(independence_number(bip).lower == 7);
  CHECK_FALSE(find_cycle_of_length(bip, 5, CycleSearchMode::exhaustive_absence).found());

  const auto d = oracle::random_graph(30, 0.5, 99);
  const auto g = oracle::to_graph(d);
  CHECK(max_clique(g).lower == oracle::clique_number(d));
  CHECK(independence_number(g).lower == oracle::independence_number(d));
}

TEST_CASE("trivial family passes") {
  std::vector<Block> one{{{0}, {1}}};
  auto f = std::make_shared<const BlockGraph>("edge", 2, one, 0);
  const ColoringFamily fam(f, 1, {identity(2)}, 0);
  const auto rep = verify_family(fam, 5, 3);
  CHECK(rep.verdict == Verdict::passed);
  CHECK(rep.reasons.empty());
  CHECK(rep.partition_ok);
  CHECK(rep.clique.exact());
  CHECK(rep.clique.lower == 1);
  CHECK(rep.class_sizes == std::vector<std::size_t>{1, 0});
}

TEST_CASE("a 5-cycle in F is caught") {
  std::vector<Block> ring;
  for (Vertex i = 0; i < 5; ++i) ring.push_back({{i}, {static_cast<Vertex>((i + 1) % 5)}});
  auto f = std::make_shared<const BlockGraph>("c5", 5, ring, 0);
  const ColoringFamily fam(f, 1, {identity(5)}, 0);
  const auto rep = verify_family(fam, 5, 10);
  CHECK(rep.verdict == Verdict::failed);
  REQUIRE(rep.base_checks.size() == 2);
  CHECK_FALSE(rep.base_checks[0].found());
  REQUIRE(rep.base_checks[1].found());
  CHECK(is_cycle(f->graph(), *rep.base_checks[1].witness));
  REQUIRE(rep.per_color.size() == 1);
  REQUIRE(rep.per_color[0].cycle.found());
  const SimpleGraph cls(5, copy_edges(fam, 0));
  CHECK(is_cycle(cls, *rep.per_color[0].cycle.witness));
}

TEST_CASE("a corrupted inverse is caught by the edge route") {
  const auto f = std::make_shared<const BlockGraph>(random_block_construction(certified_cage(), 7));
  auto fam = sample_coloring_family(f, 2, 2, 7);
  REQUIRE(verify_family(fam, 5, 1000).reasons.empty());
  // Swap two inverse entries in different base classes.
  const auto& inv = fam.inverse(0);
  Vertex a = 0, b = 1;
  while (inv[b] / 2 == inv[a] / 2) ++b;
  const Vertex ia = inv[a], ib = inv[b];
  fam.corrupt_inverse_for_testing(0, a, ib);
  fam.corrupt_inverse_for_testing(0, b, ia);
  const auto rep = verify_family(fam, 5, 1000);
  CHECK(rep.verdict == Verdict::failed);
  CHECK_FALSE(rep.per_color[0].matches_edge_route);
}

TEST_CASE("budgets lead to indeterminate verdicts") {
  const auto f = std::make_shared<const BlockGraph>(random_block_construction(certified_cage(), 3));
  const auto fam = sample_coloring_family(f, 4, 2, 3);
  VerifyBudget small;
  small.edge_budget = 1000;
  small.sample_pairs = 5000;
  const auto rep = verify_family(fam, 5, 1000, small);
  CHECK_FALSE(rep.partition_checked);
  CHECK(rep.clique_on_subset);
  CHECK(rep.clique_vertex_count == 45);
  CHECK(rep.verdict == Verdict::indeterminate);
  CHECK(rep.per_color[0].pairs_checked == 5000);
  CHECK(rep.per_color[0].inclusion_violations == 0);
  CHECK(rep.per_color[0].matches_edge_route);

  VerifyBudget nodes;
  nodes.node_expansions = 1;
  const auto exact = verify_family(fam, 5, 1000);
  REQUIRE(exact.clique.exact());
  const std::size_t m = exact.clique.lower + 1;
  CHECK(verify_family(fam, 5, m).verdict == Verdict::passed);
  const auto capped = verify_family(fam, 5, m, nodes);
  CHECK(capped.clique.upper >= exact.clique.lower);
  CHECK(capped.clique.lower <= exact.clique.lower);
  CHECK(capped.verdict == Verdict::indeterminate);

  CHECK_THROWS_AS(verify_family(fam, 6, 10), ParameterError);
  CHECK(std::string(verdict_name(Verdict::indeterminate)) == "indeterminate");
}

TEST_CASE("per-block independence Monte Carlo") {
  const auto base = certified_cage();
  const double expected[] = {1.0, 0.5, 0.25};
  for (unsigned t_a = 1; t_a <= 3; ++t_a) {
    const auto est = block_independence_mc(base, t_a, 10000, 42);
    CAPTURE(t_a);
    CHECK(est.expected == expected[t_a - 1]);
    CHECK(est.lower <= est.expected);
    CHECK(est.expected <= est.upper);
  }
  CHECK_THROWS_AS(block_independence_mc(base, 0, 10000, 1), ParameterError);
  CHECK_THROWS_AS(block_independence_mc(base, 4, 10000, 1), ParameterError);
  CHECK_THROWS_AS(block_independence_mc(base, 2, 999, 1), ParameterError);
  CHECK(block_independence_mc(base, 2, 5000, 9).hits == block_independence_mc(base, 2, 5000, 9).hits);
}
