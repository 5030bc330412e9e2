#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/cycles.hpp"
#include "ramsey/geometry.hpp"

namespace ramsey {

struct VerifyBudget {
  std::uint64_t node_expansions = kDefaultNodeBudget;
  std::size_t edge_budget = kDefaultEdgeBudget;  // pairs of K_N scanned explicitly
  std::size_t sample_pairs = 200'000;            // used when K_N exceeds edge_budget
};

enum class Verdict { passed, failed, indeterminate };
const char* verdict_name(Verdict verdict) noexcept;

struct ColorClassCheck {
  Color color = 0;
  std::size_t edge_count = 0;
  // Inclusion of the class in F_i, checked on every pair of K_N when it fits
  // the edge budget, otherwise on a seeded sample.
  bool inclusion_exhaustive = false;
  std::size_t pairs_checked = 0;
  std::size_t inclusion_violations = 0;
  // The class also has to agree with a second construction that maps the
  // edges of F' through the permutations and applies the min-index rule.
  bool matches_edge_route = false;
  CycleSearchResult cycle;  // search for the target cycle in the class
};

struct VerificationReport {
  unsigned target_cycle = 5;
  unsigned k = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t m_target = 0;
  std::uint64_t seed = 0;

  std::vector<CycleSearchResult> base_checks;  // odd lengths 3..target in F
  std::vector<ColorClassCheck> per_color;

  bool partition_checked = false;
  bool partition_ok = false;
  std::size_t pairs_total = 0;
  std::vector<std::size_t> class_sizes;  // index 0 is colour 1

  CliqueResult clique;
  bool clique_checked = false;
  bool clique_on_subset = false;
  std::size_t clique_vertex_count = 0;

  Verdict verdict = Verdict::indeterminate;
  std::vector<std::string> reasons;
  double wall_time_seconds = 0;
};

/// Checks the colouring: F has no odd cycle up to the target length,
/// colours 1..k contain no target cycle, and the remainder colour has no
/// clique of size m. Budget exhaustion yields Verdict::indeterminate.
VerificationReport verify_family(const ColoringFamily& family, unsigned target_cycle, std::size_t m,
                                 const VerifyBudget& budget = {}, unsigned threads = 1);

/// Edges of F_{copy+1} built from the edge list of F' and the permutation
/// (not the inverse-permutation oracle). Sorted, u < v.
std::vector<Edge> copy_edges(const ColoringFamily& family, unsigned copy);

struct ProportionEstimate {
  std::size_t samples = 0;
  std::size_t hits = 0;
  double estimate = 0;
  double lower = 0;   // Wald interval, 3 standard errors
  double upper = 0;
  double expected = 0;
};

/// Monte Carlo estimate of Pr[a random t_a-subset of one block is
/// independent in F]: each sample picks a block of degree >= t_a, a fresh
/// fair-coin split of it and a uniform t_a-subset of its neighbourhood.
/// expected is 2^(1 - t_a).
ProportionEstimate block_independence_mc(const BipartiteIncidenceGraph& base, unsigned t_a, std::size_t samples,
                                         std::uint64_t seed);

}  // namespace ramsey
