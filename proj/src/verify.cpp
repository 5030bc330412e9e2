#include "ramsey/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "ramsey/error.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

const char* verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::passed: return "passed";
    case Verdict::failed: return "failed";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::vector<Edge> copy_edges(const ColoringFamily& family, unsigned copy) {
  const auto& perm = family.permutation(copy);
  const std::size_t r = family.r();
  std::vector<Edge> out;
  out.reserve(family.block_graph().edges().size() * r * r);
  for (const auto& [a, b] : family.block_graph().edges()) {
    for (std::size_t x = 0; x < r; ++x) {
      for (std::size_t y = 0; y < r; ++y) {
        const Vertex u = perm[a * r + x];
        const Vertex v = perm[b * r + y];
        out.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Edge> set_difference(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> set_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t pair_index(Vertex u, Vertex v, std::size_t n) {
  // u < v; row-major over the strict upper triangle.
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

}  // namespace

VerificationReport verify_family(const ColoringFamily& family, unsigned target_cycle, std::size_t m,
                                 const VerifyBudget& budget, unsigned threads) {
  if (target_cycle != 5 && target_cycle != 7) {
    throw ParameterError("target cycle must be 5 or 7, got " + std::to_string(target_cycle));
  }
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target_cycle = target_cycle;
  report.k = family.k();
  report.n = family.n_vertices();
  report.r = family.r();
  report.m_target = m;
  report.seed = family.master_seed();
  const std::size_t n = family.n_vertices();
  report.pairs_total = n < 2 ? 0 : n * (n - 1) / 2;
  const bool full_scan = report.pairs_total <= budget.edge_budget;

  // (a) F itself: every odd cycle of length <= target would survive the blowup.
  for (unsigned length = 3; length <= target_cycle; length += 2) {
    report.base_checks.push_back(
        find_cycle_of_length(family.block_graph().graph(), length, CycleSearchMode::exhaustive_absence));
    if (report.base_checks.back().found()) {
      report.reasons.push_back("F contains a " + std::to_string(length) + "-cycle");
    }
  }

  // (b) colours 1..k.
  std::vector<Edge> claimed;  // union of F_1..F_{i-1} (edge route)
  std::vector<std::vector<Edge>> oracle_classes;
  if (full_scan) {
    for (Color c = 1; c <= family.k() + 1; ++c) {
      oracle_classes.push_back(materialize_color_class(family, c, std::nullopt, budget.edge_budget, threads));
    }
  }
  Rng sampler(derive_seed(family.master_seed(), Stage::verify_sampling, 0));
  for (unsigned i = 0; i < family.k(); ++i) {
    ColorClassCheck check;
    check.color = i + 1;
    const auto copy = copy_edges(family, i);
    const auto edge_route = set_difference(copy, claimed);
    if (full_scan) {
      const auto& cls = oracle_classes[i];
      check.inclusion_exhaustive = true;
      check.pairs_checked = report.pairs_total;
      for (const auto& [u, v] : cls)
        if (!family.in_copy(i, u, v)) ++check.inclusion_violations;
      check.matches_edge_route = cls == edge_route;
    } else {
      check.matches_edge_route = true;
      for (std::size_t s = 0; s < budget.sample_pairs; ++s) {
        auto u = static_cast<Vertex>(sampler.below(n));
        auto v = static_cast<Vertex>(sampler.below(n - 1));
        if (v >= u) ++v;
        if (u > v) std::swap(u, v);
        const bool oracle_says = family.edge_color(u, v) == check.color;
        if (oracle_says && !family.in_copy(i, u, v)) ++check.inclusion_violations;
        if (oracle_says != std::binary_search(edge_route.begin(), edge_route.end(), Edge{u, v})) {
          check.matches_edge_route = false;
        }
        ++check.pairs_checked;
      }
    }
    const auto& cls = full_scan ? oracle_classes[i] : edge_route;
    check.edge_count = cls.size();
    check.cycle = find_cycle_of_length(SimpleGraph(n, cls), target_cycle, CycleSearchMode::exhaustive_absence);
    if (check.cycle.found()) {
      report.reasons.push_back("colour " + std::to_string(check.color) + " contains a " +
                               std::to_string(target_cycle) + "-cycle");
    }
    if (check.inclusion_violations) {
      report.reasons.push_back("colour " + std::to_string(check.color) + " has edges outside F_" +
                               std::to_string(check.color));
    }
    if (!check.matches_edge_route) {
      report.reasons.push_back("colour " + std::to_string(check.color) +
                               " disagrees with the class built from the edges of F'");
    }
    claimed = set_union(claimed, copy);
    report.per_color.push_back(std::move(check));
  }

  // Partition of K_N.
  if (full_scan) {
    report.partition_checked = true;
    std::vector<std::uint8_t> hits(report.pairs_total, 0);
    bool ok = true;
    for (const auto& cls : oracle_classes) {
      report.class_sizes.push_back(cls.size());
      for (const auto& [u, v] : cls) ok &= ++hits[pair_index(u, v, n)] == 1;
    }
    ok &= std::all_of(hits.begin(), hits.end(), [](std::uint8_t h) { return h == 1; });
    report.partition_ok = ok;
    if (!ok) report.reasons.push_back("colour classes do not partition the pairs of K_N");
  }

  // (c) colour k+1.
  if (full_scan) {
    report.clique_vertex_count = n;
    report.clique = max_clique(SimpleGraph(n, oracle_classes.back()), budget.node_expansions);
    report.clique_checked = true;
  } else {
    std::size_t s = n;
    while (s > 1 && s * (s - 1) / 2 > budget.edge_budget) --s;
    if (s >= 2) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), Vertex{0});
      Rng picker(derive_seed(family.master_seed(), Stage::verify_sampling, 1));
      picker.shuffle(std::span<Vertex>(all));
      all.resize(s);
      std::sort(all.begin(), all.end());
      const auto edges = materialize_color_class(family, family.k() + 1, all, budget.edge_budget, threads);
      std::vector<Edge> local;
      local.reserve(edges.size());
      for (const auto& [u, v] : edges) {
        const auto lu = static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), u) - all.begin());
        const auto lv = static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), v) - all.begin());
        local.emplace_back(lu, lv);
      }
      report.clique = max_clique(SimpleGraph(s, local), budget.node_expansions);
      for (auto& w : report.clique.witness) w = all[w];
      report.clique_on_subset = true;
      report.clique_vertex_count = s;
      report.clique_checked = true;
    }
  }

  const bool clique_found = report.clique_checked && report.clique.lower >= m;
  if (clique_found) {
    report.reasons.push_back("colour " + std::to_string(family.k() + 1) + " contains a clique of size " +
                             std::to_string(report.clique.lower) + " >= m = " + std::to_string(m));
  }
  if (!report.reasons.empty()) {
    report.verdict = Verdict::failed;
  } else if (!report.clique_checked) {
    report.verdict = Verdict::indeterminate;
    report.reasons.push_back("edge budget too small to bound the clique number of colour " +
                             std::to_string(family.k() + 1));
  } else if (report.clique_on_subset) {
    report.verdict = Verdict::indeterminate;
    report.reasons.push_back("clique search ran on a " + std::to_string(report.clique_vertex_count) +
                             "-vertex sample only; no upper bound for the full class");
  } else if (report.clique.upper < m) {
    report.verdict = Verdict::passed;
  } else {
    report.verdict = Verdict::indeterminate;
    report.reasons.push_back("node budget exhausted: clique number in [" + std::to_string(report.clique.lower) +
                             ", " + std::to_string(report.clique.upper) + "]");
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ProportionEstimate block_independence_mc(const BipartiteIncidenceGraph& base, unsigned t_a, std::size_t samples,
                                         std::uint64_t seed) {
  if (t_a < 1) throw ParameterError("t_a must be at least 1");
  if (samples < 1000) throw ParameterError("need at least 1000 samples, got " + std::to_string(samples));
  std::vector<Vertex> eligible;
  for (Vertex a = 0; a < base.part_a_size(); ++a)
    if (base.neighbors_of_a(a).size() >= t_a) eligible.push_back(a);
  if (eligible.empty()) {
    throw ParameterError("t_a = " + std::to_string(t_a) + " exceeds every A-degree of '" + base.name() + "'");
  }

  Rng rng(derive_seed(seed, Stage::block_monte_carlo, t_a));
  ProportionEstimate est;
  est.samples = samples;
  std::vector<bool> side;
  std::vector<std::size_t> slots;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vertex a = eligible[rng.below(eligible.size())];
    const std::size_t degree = base.neighbors_of_a(a).size();
    side.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) side[i] = rng.coin();
    slots.resize(degree);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    for (std::size_t i = 0; i < t_a; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(degree - i));
      std::swap(slots[i], slots[j]);
    }
    // Inside one block, F has exactly the S x T edges, so the subset is
    // independent iff it sits on one side.
    bool independent = true;
    for (std::size_t i = 1; i < t_a && independent; ++i) independent = side[slots[i]] == side[slots[0]];
    est.hits += independent;
  }
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
  const double sigma = std::sqrt(est.estimate * (1 - est.estimate) / static_cast<double>(samples));
  est.lower = std::max(0.0, est.estimate - 3 * sigma);
  est.upper = std::min(1.0, est.estimate + 3 * sigma);
  est.expected = std::ldexp(1.0, 1 - static_cast<int>(t_a));
  return est;
}

}  // namespace ramsey
