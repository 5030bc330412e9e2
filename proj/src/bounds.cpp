#include "ramsey/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "ramsey/error.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kStirlingFrom = 1e4;

// ln Gamma(n + 1) - ln Gamma(n - k + 1) for large n - k, without the
// cancellation of two huge log-gammas.
double falling_log(double n, double k) {
  const double y = n - k;
  return k * std::log(n) - (y + 0.5) * std::log1p(-k / n) - k + 1 / (12 * n) - 1 / (12 * y);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

double log_binomial(double n, double k) {
  if (!(n >= 0) || !(k >= 0)) throw ParameterError("log_binomial needs non-negative arguments");
  if (k > n) return kNegInf;
  k = std::min(k, n - k);
  if (k == 0) return 0;
  if (n - k >= kStirlingFrom) return falling_log(n, k) - std::lgamma(k + 1);
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

const char* profile_name(IndependenceProfile profile) noexcept {
  return profile == IndependenceProfile::paper_product ? "paper-product" : "monte-carlo";
}

IndependenceProfile parse_profile(const std::string& text) {
  if (text == "paper-product") return IndependenceProfile::paper_product;
  if (text == "monte-carlo") return IndependenceProfile::monte_carlo;
  throw ParameterError("unknown profile '" + text + "' (paper-product, monte-carlo)");
}

IndependenceEstimate expected_independent_sets_log(const BipartiteIncidenceGraph& base, std::size_t t,
                                                   IndependenceProfile profile, std::size_t samples,
                                                   std::uint64_t seed) {
  const std::size_t nb = base.part_b_size();
  if (t < 1 || t > nb) throw ParameterError("need 1 <= t <= |B| = " + std::to_string(nb));
  IndependenceEstimate est;
  est.profile = profile;
  est.t = t;
  est.log_binomial_term = log_binomial(static_cast<double>(nb), static_cast<double>(t));

  if (profile == IndependenceProfile::paper_product) {
    double sum = 0;
    for (Vertex a = 0; a < base.part_a_size(); ++a) {
      const double t_a = std::round(static_cast<double>(t) * static_cast<double>(base.neighbors_of_a(a).size()) /
                                    static_cast<double>(nb));
      if (t_a >= 2) {
        sum += (1 - t_a) * kLn2;
      } else {
        ++est.low_blocks;
      }
    }
    est.log_value = est.log_lower = est.log_upper = est.log_binomial_term + sum;
    return est;
  }

  if (samples == 0) throw ParameterError("monte-carlo profile needs samples >= 1");
  Rng rng(derive_seed(seed, Stage::independent_set_monte_carlo, t));
  std::vector<Vertex> pool(nb);
  std::vector<bool> chosen(nb, false);
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t i = 0; i < t; ++i) std::swap(pool[i], pool[i + rng.below(nb - i)]);
    for (std::size_t i = 0; i < t; ++i) chosen[pool[i]] = true;
    bool independent = true;
    for (Vertex a = 0; a < base.part_a_size() && independent; ++a) {
      int first = -1;
      for (Vertex b : base.neighbors_of_a(a)) {
        if (!chosen[b]) continue;
        const int coin = rng.coin() ? 1 : 0;
        if (first < 0) {
          first = coin;
        } else if (coin != first) {
          independent = false;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < t; ++i) chosen[pool[i]] = false;
    est.hits += independent;
  }
  est.samples = samples;
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(est.hits) / n;
  const double z2 = 9.0;
  const double denom = 1 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = 3 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  const auto to_log = [](double x) { return x > 0 ? std::log(x) : kNegInf; };
  est.log_value = est.log_binomial_term + to_log(p);
  est.log_lower = est.log_binomial_term + to_log(std::max(0.0, centre - half));
  est.log_upper = est.log_binomial_term + to_log(std::min(1.0, centre + half));
  return est;
}

double blowup_independent_count_log(double f_size, double t, double r, double m) {
  if (t > f_size || m > t * r) return kNegInf;
  return log_binomial(f_size, t) + log_binomial(t * r, m);
}

double clique_expectation_log(double n, double m, unsigned k, double log_indep_count) {
  if (m > n) throw ParameterError("clique_expectation_log needs m <= N");
  const double total = log_binomial(n, m);
  if (k == 0) return total;
  if (log_indep_count == kNegInf) return kNegInf;
  return (1.0 - k) * total + k * log_indep_count;
}

FeasibilityReport feasible_parameters(double q, unsigned k, double c, double d, double rho) {
  if (!(q >= 2)) throw ParameterError("q must be at least 2");
  if (k < 1) throw ParameterError("k must be at least 1");
  if (c < 0 || d < 0 || rho < 0) throw ParameterError("c, d and rho must be non-negative");
  FeasibilityReport rep;
  rep.q = q;
  rep.k = k;
  rep.c = c;
  rep.d = d;
  rep.rho = rho;
  const double q4 = std::pow(q, 4), q8 = q4 * q4;
  const double blocks = q8 + q4 + 1;
  rep.a_size = (q + 1) * blocks;
  rep.f_size = (q * q * q + 1) * blocks;
  rep.t = std::round(rho * q8);
  rep.r = std::round(c * std::pow(q, 3.0 * (k - 1)));
  rep.m = std::round(d * q8 * std::log(q));
  rep.n = rep.r * rep.f_size;

  bool valid = true;
  const auto reject = [&](std::string why) {
    rep.flags.push_back("infeasible: " + why);
    valid = false;
  };
  if (rep.t == 0) reject("t = 0");
  if (rep.r == 0) reject("r = 0");
  if (rep.m == 0) reject("m = 0");
  if (rep.t > rep.f_size) reject("t = " + fmt(rep.t) + " > |F| = " + fmt(rep.f_size));
  if (rep.m > rep.t * rep.r) reject("m = " + fmt(rep.m) + " > t r = " + fmt(rep.t * rep.r));
  if (rep.m > rep.n) reject("m > N");

  // Every block has degree q^3 + 1, so the expected profile is uniform.
  rep.t_a = std::round(rep.t * (q * q * q + 1) / rep.f_size);
  if (valid) {
    rep.log_e_indep = log_binomial(rep.f_size, rep.t);
    if (rep.t_a >= 2) {
      rep.log_e_indep += rep.a_size * (1 - rep.t_a) * kLn2;
    } else {
      rep.flags.push_back("t_a = " + fmt(rep.t_a) + " <= 1: block factors taken as 1");
    }
    if (rep.log_e_indep >= 0) rep.flags.push_back("expected independent t-sets in F not below 1");
    rep.log_indep_count_blowup = blowup_independent_count_log(rep.f_size, rep.t, rep.r, rep.m);
    rep.log_e_cliques = clique_expectation_log(rep.n, rep.m, k, rep.log_indep_count_blowup);
    rep.margin_nats = -rep.log_e_cliques;
  } else {
    rep.log_e_indep = rep.log_indep_count_blowup = rep.log_e_cliques = std::numeric_limits<double>::quiet_NaN();
    rep.margin_nats = kNegInf;
  }
  rep.feasible = valid && rep.margin_nats > 0;
  return rep;
}

SolveResult solve_constants(double q, unsigned k, const ConstantGrid& grid) {
  if (grid.c.empty() || grid.d.empty() || grid.rho.empty()) throw ParameterError("constant grid is empty");
  SolveResult out;
  bool have = false;
  const auto better = [](const FeasibilityReport& x, const FeasibilityReport& best) {
    if (x.margin_nats != best.margin_nats) return x.margin_nats > best.margin_nats;
    if (x.c != best.c) return x.c < best.c;
    if (x.d != best.d) return x.d > best.d;
    return x.rho < best.rho;
  };
  for (double c : grid.c) {
    for (double d : grid.d) {
      for (double rho : grid.rho) {
        auto rep = feasible_parameters(q, k, c, d, rho);
        ++out.evaluated;
        if (rep.feasible) ++out.feasible_points;
        if (!have || better(rep, out.best)) {
          out.best = std::move(rep);
          have = true;
        }
      }
    }
  }
  out.any_feasible = out.feasible_points > 0;
  return out;
}

MarginScan scan_margins(const std::vector<double>& qs, unsigned k, const ConstantGrid& grid) {
  MarginScan scan;
  scan.k = k;
  for (double q : qs) scan.rows.push_back(solve_constants(q, k, grid));
  std::size_t first = scan.rows.size();
  while (first > 0 && scan.rows[first - 1].best.margin_nats > 0) --first;
  if (first < scan.rows.size()) {
    scan.crossing_q = scan.rows[first].best.q;
    scan.negative_before_crossing = first > 0;
    scan.increasing_after_crossing = true;
    for (std::size_t i = first + 1; i < scan.rows.size(); ++i)
      if (!(scan.rows[i].best.margin_nats > scan.rows[i - 1].best.margin_nats)) scan.increasing_after_crossing = false;
  }
  return scan;
}

double scaling_exponent(unsigned k, unsigned cycle) {
  if (cycle == 5) return 3.0 * k / 8 + 1;
  if (cycle == 7) return 2.0 * k / 9 + 1;
  throw ParameterError("scaling table covers cycles 5 and 7, got " + std::to_string(cycle));
}

std::vector<ScalingRow> scaling_table(unsigned k, unsigned cycle, const std::vector<double>& m_values) {
  const double e = scaling_exponent(k, cycle);
  const double ell = (cycle - 1) / 2.0;
  const double prior = k / (2 * ell - 1) + 1;
  const double prior_log_power = k + 2 * k / (2 * ell - 1);
  std::vector<ScalingRow> rows;
  for (double m : m_values) {
    if (!(m >= 3)) throw ParameterError("scaling table needs m >= 3");
    ScalingRow row;
    row.m = m;
    row.exponent = e;
    row.log_value = e * (std::log(m) - std::log(std::log(m)));
    row.value = std::exp(row.log_value);
    row.prior_exponent = prior;
    row.prior_log_value = prior * std::log(m) - prior_log_power * std::log(std::log(m));
    row.prior_value = std::exp(row.prior_log_value);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ramsey
