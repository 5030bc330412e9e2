#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/geometry.hpp"

namespace ramsey {

// Sizes at the parameter scales of interest exceed 2^64 (|F| ~ q^11), so
// counts in this module are doubles holding integral values.

/// ln C(n, k). Exact symmetry in k <-> n - k; 0 for k in {0, n}; -inf when
/// k > n. Log-gamma for n - k below 10^4, a Stirling difference above.
double log_binomial(double n, double k);

enum class IndependenceProfile { paper_product, monte_carlo };
const char* profile_name(IndependenceProfile profile) noexcept;
IndependenceProfile parse_profile(const std::string& text);

struct IndependenceEstimate {
  IndependenceProfile profile = IndependenceProfile::paper_product;
  std::size_t t = 0;
  double log_binomial_term = 0;  // ln C(|B|, t)
  double log_value = 0;          // ln of the expected number of independent t-sets
  double log_lower = 0;          // confidence interval (monte-carlo only)
  double log_upper = 0;
  std::size_t samples = 0;
  std::size_t hits = 0;
  // paper-product: blocks whose profile value t_a is 0 or 1 contribute a
  // factor 1 rather than the formula's 2^(1 - t_a).
  std::size_t low_blocks = 0;
};

/// Expected number of independent t-sets in F = block construction on G.
/// paper-product: ln C(|B|,t) + sum over blocks with t_a >= 2 of (1 - t_a) ln 2,
/// with t_a = round(t deg(a) / |B|). monte-carlo: ln[C(|B|,t) Pr(I independent)]
/// for uniform t-sets I against fresh block splits, with a 3-sigma Wilson
/// interval carried into the log domain.
IndependenceEstimate expected_independent_sets_log(const BipartiteIncidenceGraph& base, std::size_t t,
                                                   IndependenceProfile profile, std::size_t samples = 10'000,
                                                   std::uint64_t seed = 0);

/// ln[C(F_size, t) C(t r, m)]; -inf when m > t r or t > F_size.
double blowup_independent_count_log(double f_size, double t, double r, double m);

/// (1 - k) ln C(N, m) + k log_indep_count. k = 0 gives ln C(N, m).
double clique_expectation_log(double n, double m, unsigned k, double log_indep_count);

/// Parameters at generalized hexagon scale: |A| = (q+1)(q^8+q^4+1),
/// |B| = |F| = (q^3+1)(q^8+q^4+1), t = round(rho q^8),
/// r = round(c q^(3(k-1))), m = round(d q^8 ln q), N = r |F|.
struct FeasibilityReport {
  double q = 0;
  unsigned k = 0;
  double c = 0, d = 0, rho = 0;
  double a_size = 0, f_size = 0;
  double t = 0, t_a = 0, r = 0, m = 0, n = 0;
  double log_e_indep = 0;
  double log_indep_count_blowup = 0;
  double log_e_cliques = 0;
  double margin_nats = 0;  // -log_e_cliques; -inf (logs NaN) when flagged infeasible
  std::string profile_used = "expected-profile";
  bool feasible = false;
  std::vector<std::string> flags;
};

FeasibilityReport feasible_parameters(double q, unsigned k, double c, double d, double rho);

struct ConstantGrid {
  std::vector<double> c{0.5, 1, 2};
  std::vector<double> d{0.5, 1, 2};
  std::vector<double> rho{0.5, 1, 2};
};

struct SolveResult {
  FeasibilityReport best;
  std::size_t evaluated = 0;
  std::size_t feasible_points = 0;
  bool any_feasible = false;
};

/// Exhaustive grid search for the largest margin. Ties go to smaller c,
/// then larger d, then smaller rho. Throws ParameterError on an empty grid.
SolveResult solve_constants(double q, unsigned k, const ConstantGrid& grid);

struct MarginScan {
  unsigned k = 0;
  std::vector<SolveResult> rows;  // one per q, in input order
  // First q from which every margin is positive, if any.
  std::optional<double> crossing_q;
  bool increasing_after_crossing = false;
  bool negative_before_crossing = false;
};

MarginScan scan_margins(const std::vector<double>& qs, unsigned k, const ConstantGrid& grid);

struct ScalingRow {
  double m = 0;
  double exponent = 0;
  double log_value = 0;  // exponent * ln(m / ln m)
  double value = 0;
  double prior_exponent = 0;
  double prior_log_value = 0;  // prior_exponent ln m - (k + 2k/(2l-1)) ln ln m
  double prior_value = 0;
};

/// (m / ln m)^(3k/8 + 1) for C5 and (m / ln m)^(2k/9 + 1) for C7, next to
/// the older m^(k/(2l-1) + 1) / (ln m)^(k + 2k/(2l-1)) with 2l + 1 = cycle.
std::vector<ScalingRow> scaling_table(unsigned k, unsigned cycle, const std::vector<double>& m_values);
double scaling_exponent(unsigned k, unsigned cycle);

}  // namespace ramsey
