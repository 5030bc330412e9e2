#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ramsey/bounds.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/report.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

/// Exit codes shared by the pipeline and the subcommands.
enum ExitCode : int {
  kExitPassed = 0,
  kExitError = 1,
  kExitIndeterminate = 2,
  kExitFailed = 3,  // verification ran to completion and found a violation
  kExitUsage = 64,
};

int exit_code_for(Verdict verdict) noexcept;

/// Directory of the shipped cage files: $RAMSEY_FORGE_DATA if set, else the
/// source tree's data/ directory.
std::string data_directory();

struct LoadedBase {
  BipartiteIncidenceGraph graph;
  std::string source;  // file path, or "generated"
  std::string sha256;  // of the source file; empty when generated
  // Order and gonality of the shipped geometries; files need explicit values.
  std::optional<unsigned> s, t, gonality;
};

/// Builtin names: heawood, tutte-coxeter, tutte12cage, pg2-<q>. Anything
/// else is a path; `.lcf` files are LCF data, others use `format`.
LoadedBase load_base(const std::string& spec, IncidenceFormat format = IncidenceFormat::edge_list,
                     bool transpose = false);

/// Target cycle for a certified base girth. An explicit request must be
/// guaranteed by the girth; without one, a girth of 16 or more (which
/// forbids both 5 and 7) is ambiguous and rejected.
unsigned resolve_target_cycle(std::uint32_t base_girth, std::optional<unsigned> requested);

struct RunConfig {
  std::string base = "tutte12cage";
  std::string base_format = "edge-list";
  bool transpose = false;
  std::optional<unsigned> s, t_order, gonality;
  std::optional<unsigned> target_cycle;
  unsigned k = 2;
  std::size_t r = 4;
  std::size_t m = 25;
  std::optional<std::size_t> t;  // desk-scale t; default alpha(F) + 1
  // Hexagon-scale feasibility is evaluated as well when q is given.
  std::optional<double> q;
  double c = 1, d = 1, rho = 1;
  std::uint64_t seed = 1;
  unsigned retries = 0;
  VerifyBudget budget;
  std::size_t mc_samples = 10'000;
  std::string output;  // directory for report files; empty: stdout only
  unsigned threads = 1;  // no effect on any output
};

Json to_json(const RunConfig& config);
/// Reads the "config" object of a report (or a bare config object).
RunConfig run_config_from_json(const Json& doc);

struct PipelineResult {
  int exit_code = kExitError;
  Json report;  // always populated, including on errors
};

/// build/load -> certify -> block construction -> family -> verify -> bounds.
/// Errors are caught and recorded with the failing stage named.
PipelineResult run_pipeline(const RunConfig& config);

}  // namespace ramsey
