#include "ramsey/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ramsey {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json length_or_null(std::uint32_t x) {
  if (x == kInfinite) return nullptr;
  return x;
}

Json to_json(const PolygonCertificate& cert) {
  return Json{{"s", cert.s},
              {"t", cert.t},
              {"gonality", cert.gonality},
              {"girth", length_or_null(cert.girth)},
              {"diameter", length_or_null(cert.diameter)},
              {"degree_regular", cert.degree_regular},
              {"counts_match", cert.counts_match},
              {"valid", cert.valid},
              {"reason", cert.reason}};
}

Json to_json(const CycleSearchResult& result) {
  Json j{{"length", result.length},
         {"mode", mode_name(result.mode)},
         {"found", result.found()},
         {"witness", result.witness ? Json(*result.witness) : Json(nullptr)},
         {"search",
          {{"vertices", result.vertex_count},
           {"edges", result.edge_count},
           {"roots_scanned", result.roots_scanned},
           {"half_paths", result.half_paths},
           {"joins_checked", result.joins_checked}}}};
  return j;
}

Json to_json(const CliqueResult& result) {
  Json j;
  if (result.exact()) {
    j["value"] = result.lower;
  } else {
    j["bounds"] = {result.lower, result.upper};
  }
  j["exact"] = result.exact();
  j["witness"] = result.witness;
  j["node_expansions"] = result.node_expansions;
  j["budget_exhausted"] = result.budget_exhausted;
  return j;
}

Json to_json(const ColorClassCheck& check) {
  return Json{{"color", check.color},
              {"edges", check.edge_count},
              {"inclusion",
               {{"exhaustive", check.inclusion_exhaustive},
                {"pairs_checked", check.pairs_checked},
                {"violations", check.inclusion_violations}}},
              {"matches_edge_route", check.matches_edge_route},
              {"cycle", to_json(check.cycle)}};
}

Json to_json(const VerificationReport& report) {
  Json base = Json::array();
  for (const auto& c : report.base_checks) base.push_back(to_json(c));
  Json per_color = Json::array();
  for (const auto& c : report.per_color) per_color.push_back(to_json(c));
  Json clique = to_json(report.clique);
  clique["color"] = report.k + 1;
  clique["checked"] = report.clique_checked;
  clique["on_subset"] = report.clique_on_subset;
  clique["vertices_searched"] = report.clique_vertex_count;
  return Json{{"target_cycle", report.target_cycle},
              {"k", report.k},
              {"N", report.n},
              {"r", report.r},
              {"m", report.m_target},
              {"seeds", {{"master", report.seed}}},
              {"base_checks", base},
              {"per_color", per_color},
              {"partition",
               {{"checked", report.partition_checked},
                {"ok", report.partition_ok},
                {"pairs", report.pairs_total},
                {"class_sizes", report.class_sizes}}},
              {"clique", clique},
              {"node_expansions", report.clique.node_expansions},
              {"verdict", verdict_name(report.verdict)},
              {"passed", report.verdict == Verdict::passed},
              {"reasons", report.reasons},
              {"timing", {{"wall_time_seconds", report.wall_time_seconds}}}};
}

Json to_json(const ProportionEstimate& est) {
  return Json{{"samples", est.samples}, {"hits", est.hits},     {"estimate", est.estimate},
              {"lower", est.lower},     {"upper", est.upper},   {"expected", est.expected},
              {"expected_in_interval", est.lower <= est.expected && est.expected <= est.upper}};
}

Json to_json(const IndependenceEstimate& est) {
  Json j{{"profile", profile_name(est.profile)},
         {"t", est.t},
         {"log_binomial", number(est.log_binomial_term)},
         {"log_value", number(est.log_value)}};
  if (est.profile == IndependenceProfile::monte_carlo) {
    j["log_lower"] = number(est.log_lower);
    j["log_upper"] = number(est.log_upper);
    j["samples"] = est.samples;
    j["hits"] = est.hits;
  } else {
    j["blocks_with_t_a_at_most_1"] = est.low_blocks;
  }
  return j;
}

Json to_json(const FeasibilityReport& rep) {
  return Json{{"q", rep.q},
              {"k", rep.k},
              {"c", rep.c},
              {"d", rep.d},
              {"rho", rep.rho},
              {"A", rep.a_size},
              {"F", rep.f_size},
              {"t", rep.t},
              {"t_a", rep.t_a},
              {"r", rep.r},
              {"m", rep.m},
              {"N", rep.n},
              {"log_E_indep", number(rep.log_e_indep)},
              {"log_indep_count_blowup", number(rep.log_indep_count_blowup)},
              {"log_E_cliques", number(rep.log_e_cliques)},
              {"margin_nats", number(rep.margin_nats)},
              {"profile_used", rep.profile_used},
              {"feasible", rep.feasible},
              {"flags", rep.flags}};
}

Json to_json(const SolveResult& result) {
  return Json{{"best", to_json(result.best)},
              {"evaluated", result.evaluated},
              {"feasible_points", result.feasible_points},
              {"any_feasible", result.any_feasible}};
}

Json to_json(const MarginScan& scan) {
  Json rows = Json::array();
  for (const auto& r : scan.rows) rows.push_back(to_json(r));
  return Json{{"k", scan.k},
              {"rows", rows},
              {"crossing_q", scan.crossing_q ? Json(*scan.crossing_q) : Json(nullptr)},
              {"negative_before_crossing", scan.negative_before_crossing},
              {"increasing_after_crossing", scan.increasing_after_crossing}};
}

Json to_json(unsigned k, unsigned cycle, std::span<const ScalingRow> rows) {
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"m", r.m},
                     {"exponent", r.exponent},
                     {"log_value", r.log_value},
                     {"value", number(r.value)},
                     {"prior_exponent", r.prior_exponent},
                     {"prior_log_value", r.prior_log_value},
                     {"prior_value", number(r.prior_value)}});
  }
  return Json{{"k", k}, {"cycle", cycle}, {"rows", table}};
}

void strip_timing(Json& doc) {
  if (doc.is_object()) {
    doc.erase("timing");
    for (auto& [key, value] : doc.items()) strip_timing(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) strip_timing(value);
  }
}

namespace {

void csv_number(std::ostream& out, double x) {
  if (!std::isfinite(x)) return;  // empty cell
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

void write_feasibility_csv_row(std::ostream& out, const FeasibilityReport& rep) {
  for (double x : {rep.q, static_cast<double>(rep.k), rep.c, rep.d, rep.rho, rep.t, rep.t_a, rep.r, rep.m, rep.n,
                   rep.log_e_indep, rep.log_indep_count_blowup, rep.log_e_cliques, rep.margin_nats}) {
    csv_number(out, x);
    out << ',';
  }
  out << (rep.feasible ? "true" : "false") << '\n';
}

void write_scaling_csv(std::ostream& out, std::span<const ScalingRow> rows) {
  out << kScalingCsvHeader << '\n';
  for (const auto& r : rows) {
    const double cells[] = {r.m, r.exponent, r.log_value, r.value, r.prior_exponent, r.prior_log_value, r.prior_value};
    for (std::size_t i = 0; i < 7; ++i) {
      if (i) out << ',';
      csv_number(out, cells[i]);
    }
    out << '\n';
  }
}

}  // namespace ramsey
