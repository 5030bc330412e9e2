#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/error.hpp"
#include "ramsey/pipeline.hpp"

using namespace ramsey;

TEST_CASE("log_binomial") {
  CHECK(log_binomial(17, 0) == 0);
  CHECK(log_binomial(17, 17) == 0);
  CHECK(log_binomial(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-12));
  CHECK(log_binomial(52, 5) == doctest::Approx(std::log(2598960.0)).epsilon(1e-12));
  CHECK(log_binomial(3, 4) == -INFINITY);
  CHECK_THROWS_AS(log_binomial(-1, 0), ParameterError);
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      const double exact = std::log(static_cast<double>(oracle::binomial(n, k)));
      const double got = log_binomial(n, k);
      if (exact != 0) CHECK(std::abs(got - exact) <= 1e-9 * std::abs(exact));
      else CHECK(std::abs(got) <= 1e-12);
      CHECK(std::abs(got - log_binomial(n, n - k)) <= 1e-12);
    }
  // Both evaluation branches agree around the switch.
  for (double n : {9990.0, 10010.0, 999990.0, 3e6, 1e12}) {
    const double by_sum = log_binomial(n, 5);
    double direct = -std::lgamma(6.0);
    for (int i = 0; i < 5; ++i) direct += std::log(n - i);
    CHECK(by_sum == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK(std::abs(log_binomial(1e12, 1e12 - 3) - log_binomial(1e12, 3)) <= 1e-12);
}

TEST_CASE("blowup and clique expectation") {
  const double expect = std::log(static_cast<double>(oracle::binomial(63, 26))) + log_binomial(104, 25);
  CHECK(blowup_independent_count_log(63, 26, 4, 25) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(blowup_independent_count_log(63, 26, 4, 104) == doctest::Approx(log_binomial(63, 26)));
  CHECK(blowup_independent_count_log(63, 26, 4, 0) == log_binomial(63, 26));
  CHECK(blowup_independent_count_log(63, 26, 4, 105) == -INFINITY);
  CHECK(blowup_independent_count_log(63, 64, 4, 1) == -INFINITY);

  const double x = blowup_independent_count_log(63, 26, 4, 25);
  CHECK(clique_expectation_log(252, 25, 1, x) == x);
  CHECK(clique_expectation_log(252, 25, 0, x) == log_binomial(252, 25));
  const double two = clique_expectation_log(252, 25, 2, x);
  CHECK(std::isfinite(two));
  CHECK(two == doctest::Approx(2 * x - log_binomial(252, 25)));
  CHECK(clique_expectation_log(252, 25, 3, -INFINITY) == -INFINITY);
  CHECK_THROWS_AS(clique_expectation_log(10, 11, 1, 0), ParameterError);
}

TEST_CASE("feasibility reports") {
  const auto rep = feasible_parameters(2, 1, 1, 1, 1);
  CHECK(rep.a_size == 3 * 273);
  CHECK(rep.f_size == 9 * 273);
  CHECK(rep.t == 256);
  CHECK(rep.r == 1);
  CHECK(rep.m == std::round(256 * std::log(2.0)));
  CHECK(rep.n == 2457);
  CHECK(std::isfinite(rep.margin_nats));
  CHECK((rep.margin_nats > 0) == (rep.log_e_cliques < 0));

  const auto zero = feasible_parameters(8, 2, 1, 1, 0);
  CHECK_FALSE(zero.feasible);
  CHECK(zero.margin_nats == -INFINITY);
  CHECK(std::isnan(zero.log_e_cliques));
  REQUIRE_FALSE(zero.flags.empty());
  CHECK(zero.flags.front() == "infeasible: t = 0");

  CHECK_THROWS_AS(feasible_parameters(1, 1, 1, 1, 1), ParameterError);
  CHECK_THROWS_AS(feasible_parameters(2, 0, 1, 1, 1), ParameterError);
  CHECK_THROWS_AS(feasible_parameters(2, 1, -1, 1, 1), ParameterError);

  // k = 1: C(F,t) C(tr,m) >= 1 whenever it is defined, so no margin is positive.
  for (double q : {2.0, 8.0, 32.0, 128.0, 512.0}) CHECK(feasible_parameters(q, 1, 1, 1, 1).margin_nats <= 0);
}

TEST_CASE("constant search") {
  ConstantGrid one{{1}, {1}, {1}};
  const auto single = solve_constants(8, 2, one);
  CHECK(single.evaluated == 1);
  CHECK(single.best.c == 1);
  CHECK(single.best.margin_nats == feasible_parameters(8, 2, 1, 1, 1).margin_nats);

  const auto coarse = solve_constants(512, 2, ConstantGrid{});
  CHECK(coarse.evaluated == 27);
  CHECK(coarse.any_feasible);
  CHECK(coarse.best.margin_nats > 0);

  ConstantGrid fine{{0.25, 0.5, 1, 2, 4}, {0.25, 0.5, 1, 2, 4}, {0.25, 0.5, 1, 2, 4}};
  for (double q : {2.0, 8.0, 32.0}) CHECK(solve_constants(q, 2, fine).best.margin_nats >= solve_constants(q, 2, ConstantGrid{}).best.margin_nats);

  ConstantGrid empty{{}, {1}, {1}};
  CHECK_THROWS_AS(solve_constants(8, 2, empty), ParameterError);

  const auto scan = scan_margins({2, 8, 32, 128, 512}, 2, ConstantGrid{});
  REQUIRE(scan.crossing_q);
  CHECK(scan.negative_before_crossing);
  CHECK(scan.increasing_after_crossing);
}

TEST_CASE("margin against r with t and m fixed") {
  // Growing c changes only r (and N). For k >= 2 the clique term loses
  // (k - 1) m ln r while the blowup term gains k m ln r.
  for (unsigned k : {2u, 3u}) {
    for (double q : {8.0, 32.0}) {
      double prev = INFINITY;
      for (double c : {1.0, 2.0, 4.0, 8.0}) {
        const auto rep = feasible_parameters(q, k, c, 1, 1);
        REQUIRE(std::isfinite(rep.margin_nats));
        CHECK(rep.margin_nats <= prev);
        prev = rep.margin_nats;
      }
    }
  }
}

TEST_CASE("scaling table") {
  CHECK(scaling_exponent(8, 5) == 4);
  CHECK(scaling_exponent(9, 7) == 3);
  CHECK_THROWS_AS(scaling_exponent(2, 6), ParameterError);
  CHECK_THROWS_AS(scaling_table(2, 5, {2}), ParameterError);
  const auto rows = scaling_table(2, 5, {1e3});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].exponent == 1.75);
  CHECK(rows[0].log_value == doctest::Approx(1.75 * std::log(1e3 / std::log(1e3))));
  // Prior bound for C5 (l = 2): m^(k/3 + 1) / (ln m)^(k + 2k/3).
  CHECK(rows[0].prior_exponent == doctest::Approx(2.0 / 3 + 1));
  CHECK(rows[0].prior_log_value ==
        doctest::Approx((2.0 / 3 + 1) * std::log(1e3) - (2 + 4.0 / 3) * std::log(std::log(1e3))));
}

TEST_CASE("expected independent sets on the 12-cage") {
  auto base = load_base("tutte12cage").graph;
  const auto one = expected_independent_sets_log(base, 1, IndependenceProfile::paper_product);
  CHECK(one.log_value == doctest::Approx(std::log(63.0)));
  const auto one_mc = expected_independent_sets_log(base, 1, IndependenceProfile::monte_carlo, 2000, 1);
  CHECK(one_mc.log_value == doctest::Approx(std::log(63.0)));

  // Pr[a random pair is independent] = 1 - E|E(F)| / C(63, 2).
  const double exact = std::log(1953.0) + std::log(1 - 94.5 / 1953);
  const auto mc = expected_independent_sets_log(base, 2, IndependenceProfile::monte_carlo, 20000, 5);
  CHECK(mc.log_lower <= exact);
  CHECK(exact <= mc.log_upper);
  CHECK(mc.log_binomial_term == doctest::Approx(std::log(1953.0)));

  const auto all_pp = expected_independent_sets_log(base, 63, IndependenceProfile::paper_product);
  const auto all_mc = expected_independent_sets_log(base, 63, IndependenceProfile::monte_carlo, 2000, 2);
  CHECK(all_mc.log_value <= all_pp.log_upper + 1e-12);
  // t_a = 3 on every block: 63 factors of 1/4.
  CHECK(all_pp.log_value == doctest::Approx(-63 * 2 * std::log(2.0)));

  CHECK_THROWS_AS(expected_independent_sets_log(base, 0, IndependenceProfile::paper_product), ParameterError);
  CHECK_THROWS_AS(expected_independent_sets_log(base, 64, IndependenceProfile::paper_product), ParameterError);
  CHECK(parse_profile(profile_name(IndependenceProfile::monte_carlo)) == IndependenceProfile::monte_carlo);
  CHECK_THROWS_AS(parse_profile("exact"), ParameterError);

  // Doubling the samples shrinks the interval by about 1 - 1/sqrt(2).
  double narrow = 0, wide = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = expected_independent_sets_log(base, 4, IndependenceProfile::monte_carlo, 5000, seed);
    const auto b = expected_independent_sets_log(base, 4, IndependenceProfile::monte_carlo, 10000, seed);
    wide += a.log_upper - a.log_lower;
    narrow += b.log_upper - b.log_lower;
  }
  CHECK(narrow <= 0.75 * wide);
}
