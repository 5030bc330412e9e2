#include "ramsey/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramsey/blockgraph.hpp"
#include "ramsey/checksum.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/error.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

int exit_code_for(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::passed: return kExitPassed;
    case Verdict::failed: return kExitFailed;
    case Verdict::indeterminate: return kExitIndeterminate;
  }
  return kExitError;
}

std::string data_directory() {
  if (const char* env = std::getenv("RAMSEY_FORGE_DATA"); env && *env) return env;
  return RAMSEY_FORGE_DEFAULT_DATA_DIR;
}

namespace {

struct Builtin {
  const char* name;
  const char* file;
  unsigned gonality;
};

constexpr Builtin kBuiltins[] = {
    {"heawood", "heawood.lcf", 3},
    {"tutte-coxeter", "tutte_coxeter.lcf", 4},
    {"tutte12cage", "tutte12cage.lcf", 6},
};

bool supports(std::uint32_t girth, unsigned cycle) { return girth == kInfinite || 2 * cycle < girth; }

std::string girth_text(std::uint32_t girth) { return girth == kInfinite ? "infinite" : std::to_string(girth); }

}  // namespace

LoadedBase load_base(const std::string& spec, IncidenceFormat format, bool transpose) {
  for (const auto& b : kBuiltins) {
    if (spec != b.name) continue;
    const auto path = (std::filesystem::path(data_directory()) / b.file).string();
    if (!std::filesystem::exists(path)) {
      throw LookupError("builtin base '" + spec + "' not found at " + path + " (set RAMSEY_FORGE_DATA)");
    }
    LoadedBase out{load_lcf(path), path, sha256_file(path), 2u, 2u, b.gonality};
    if (transpose) out.graph = out.graph.transposed();
    return out;
  }
  if (spec.rfind("pg2-", 0) == 0) {
    unsigned q = 0;
    try {
      q = static_cast<unsigned>(std::stoul(spec.substr(4)));
    } catch (const std::exception&) {
      throw ParameterError("expected pg2-<q>, got '" + spec + "'");
    }
    return {build_projective_plane_incidence(q), "generated", "", q, q, 3u};
  }
  if (!std::filesystem::exists(spec)) throw LookupError("no builtin base or file named '" + spec + "'");
  BipartiteIncidenceGraph graph = std::filesystem::path(spec).extension() == ".lcf"
                                      ? load_lcf(spec)
                                      : load_incidence(spec, format, false);
  if (transpose) graph = graph.transposed();
  return {std::move(graph), spec, sha256_file(spec), std::nullopt, std::nullopt, std::nullopt};
}

unsigned resolve_target_cycle(std::uint32_t base_girth, std::optional<unsigned> requested) {
  if (requested) {
    if (*requested != 5 && *requested != 7) {
      throw ParameterError("target cycle must be 5 or 7, got " + std::to_string(*requested));
    }
    if (!supports(base_girth, *requested)) {
      throw PreconditionError("base girth " + girth_text(base_girth) + " < " + std::to_string(2 * *requested + 2) +
                              " insufficient for C" + std::to_string(*requested) + " guarantee");
    }
    return *requested;
  }
  if (supports(base_girth, 7)) {
    throw PreconditionError("base girth " + girth_text(base_girth) +
                            " guarantees both C5 and C7; choose one with --target-cycle");
  }
  if (!supports(base_girth, 5)) {
    throw PreconditionError("base girth " + girth_text(base_girth) + " < 12 insufficient for C5 guarantee");
  }
  return 5;
}

namespace {

Json optional_json(const auto& value) { return value ? Json(*value) : Json(nullptr); }

template <typename T>
std::optional<T> optional_from(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return doc.at(key).get<T>();
}

}  // namespace

Json to_json(const RunConfig& config) {
  return Json{{"base", config.base},
              {"base_format", config.base_format},
              {"transpose", config.transpose},
              {"s", optional_json(config.s)},
              {"t_order", optional_json(config.t_order)},
              {"gonality", optional_json(config.gonality)},
              {"target_cycle", optional_json(config.target_cycle)},
              {"k", config.k},
              {"r", config.r},
              {"m", config.m},
              {"t", optional_json(config.t)},
              {"q", optional_json(config.q)},
              {"c", config.c},
              {"d", config.d},
              {"rho", config.rho},
              {"seed", config.seed},
              {"retries", config.retries},
              {"budgets",
               {{"node_expansions", config.budget.node_expansions},
                {"edge_budget", config.budget.edge_budget},
                {"sample_pairs", config.budget.sample_pairs},
                {"mc_samples", config.mc_samples}}}};
}

RunConfig run_config_from_json(const Json& doc) {
  const Json& j = doc.contains("config") ? doc.at("config") : doc;
  try {
    RunConfig c;
    c.base = j.at("base").get<std::string>();
    c.base_format = j.value("base_format", c.base_format);
    c.transpose = j.value("transpose", false);
    c.s = optional_from<unsigned>(j, "s");
    c.t_order = optional_from<unsigned>(j, "t_order");
    c.gonality = optional_from<unsigned>(j, "gonality");
    c.target_cycle = optional_from<unsigned>(j, "target_cycle");
    c.k = j.at("k").get<unsigned>();
    c.r = j.at("r").get<std::size_t>();
    c.m = j.at("m").get<std::size_t>();
    c.t = optional_from<std::size_t>(j, "t");
    c.q = optional_from<double>(j, "q");
    c.c = j.value("c", c.c);
    c.d = j.value("d", c.d);
    c.rho = j.value("rho", c.rho);
    c.seed = j.at("seed").get<std::uint64_t>();
    c.retries = j.value("retries", 0u);
    if (j.contains("budgets")) {
      const auto& b = j.at("budgets");
      c.budget.node_expansions = b.value("node_expansions", c.budget.node_expansions);
      c.budget.edge_budget = b.value("edge_budget", c.budget.edge_budget);
      c.budget.sample_pairs = b.value("sample_pairs", c.budget.sample_pairs);
      c.mc_samples = b.value("mc_samples", c.mc_samples);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad run config: ") + e.what());
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class Stages {
 public:
  explicit Stages(Json& timing) : timing_(timing) {}

  void begin(const char* name) {
    finish();
    name_ = name;
    started_ = Clock::now();
  }
  void finish() {
    if (name_.empty()) return;
    timing_["stages"][name_] = std::chrono::duration<double>(Clock::now() - started_).count();
  }
  const std::string& current() const { return name_; }

 private:
  Json& timing_;
  std::string name_;
  Clock::time_point started_;
};

Json desk_bounds(const BipartiteIncidenceGraph& base, const BlockGraph& f, const RunConfig& config) {
  Json out;
  const auto alpha = independence_number(f.graph(), config.budget.node_expansions);
  out["alpha_F"] = to_json(alpha);
  const std::size_t nb = f.vertex_count();
  const std::size_t t = config.t ? *config.t : alpha.upper + 1;
  out["t"] = t;
  out["t_source"] = config.t ? "config" : (alpha.exact() ? "alpha(F) + 1" : "upper bound on alpha(F) + 1");
  out["r"] = config.r;
  out["m"] = config.m;
  out["F"] = nb;
  const double n = static_cast<double>(config.r * nb);
  out["N"] = config.r * nb;

  Json flags = Json::array();
  if (t >= 1 && t <= nb) {
    out["log_E_indep"] = to_json(expected_independent_sets_log(base, t, IndependenceProfile::paper_product));
    out["log_E_indep_mc"] = to_json(expected_independent_sets_log(base, t, IndependenceProfile::monte_carlo,
                                                                  config.mc_samples, config.seed));
  } else {
    flags.push_back("t = " + std::to_string(t) + " outside [1, |F|]: independent-set expectation skipped");
  }
  const double tr = static_cast<double>(t) * static_cast<double>(config.r);
  const double m = static_cast<double>(config.m);
  if (static_cast<double>(t) > static_cast<double>(nb)) flags.push_back("infeasible: t > |F|");
  if (m > tr) flags.push_back("infeasible: m > t r");
  const double count = blowup_independent_count_log(static_cast<double>(nb), static_cast<double>(t),
                                                    static_cast<double>(config.r), m);
  out["log_indep_count_blowup"] = number(count);
  if (m <= n) {
    const double e = clique_expectation_log(n, m, config.k, count);
    out["log_E_cliques"] = number(e);
    out["margin_nats"] = number(-e);
    out["feasible"] = flags.empty() && -e > 0;
  } else {
    flags.push_back("infeasible: m > N");
    out["log_E_cliques"] = nullptr;
    out["margin_nats"] = nullptr;
    out["feasible"] = false;
  }
  out["flags"] = flags;
  return out;
}

std::string serialized(const auto& writer) {
  std::ostringstream out;
  writer(out);
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ResourceError("cannot write " + path.string());
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& config) {
  const auto started = Clock::now();
  PipelineResult result;
  Json& report = result.report;
  report["tool"] = {{"name", "ramsey-forge"}, {"version", RAMSEY_FORGE_VERSION}};
  report["config"] = to_json(config);
  Json timing{{"threads", config.threads}, {"output", config.output}};
  Stages stages(timing);
  try {
    stages.begin("geometry");
    auto base = load_base(config.base, parse_incidence_format(config.base_format), config.transpose);
    const auto s = config.s ? config.s : base.s;
    const auto t_order = config.t_order ? config.t_order : base.t;
    const auto gonality = config.gonality ? config.gonality : base.gonality;
    if (!s || !t_order || !gonality) {
      throw ParameterError("base '" + config.base + "' needs explicit --s, --t-order and --gonality");
    }
    report["inputs"] = {{"base", {{"name", base.graph.name()},
                                  {"source", base.source},
                                  {"sha256", base.sha256},
                                  {"A", base.graph.part_a_size()},
                                  {"B", base.graph.part_b_size()},
                                  {"edges", base.graph.edge_count()}}}};
    const auto cert = certify_polygon(base.graph, *s, *t_order, *gonality, config.threads);
    report["certificate"] = to_json(cert);
    if (!cert.valid) throw PreconditionError("base does not certify: " + cert.reason);

    stages.begin("target-cycle");
    const unsigned target = resolve_target_cycle(cert.girth, config.target_cycle);
    report["target_cycle"] = target;
    report["forbidden_odd_cycles"] = guaranteed_forbidden_odd_cycles(cert.girth);

    stages.begin("block");
    auto f = std::make_shared<const BlockGraph>(random_block_construction(base.graph, config.seed, config.threads));
    const auto block_text = serialized([&](std::ostream& o) { write_block_graph(o, *f); });
    report["block_graph"] = {{"vertices", f->vertex_count()},
                             {"edges", f->edges().size()},
                             {"sha256", sha256_hex(block_text)}};

    Json attempts = Json::array();
    std::optional<ColoringFamily> family;
    VerificationReport verification;
    for (unsigned attempt = 0; attempt <= config.retries; ++attempt) {
      stages.begin("family");
      const std::uint64_t seed = attempt == 0 ? config.seed : derive_seed(config.seed, Stage::family_retry, attempt);
      family.emplace(sample_coloring_family(f, config.r, config.k, seed));
      stages.begin("verify");
      verification = verify_family(*family, target, config.m, config.budget, config.threads);
      const auto family_text = serialized([&](std::ostream& o) { export_family(o, *family); });
      attempts.push_back({{"attempt", attempt},
                          {"seed", seed},
                          {"family_sha256", sha256_hex(family_text)},
                          {"verdict", verdict_name(verification.verdict)}});
      if (verification.verdict != Verdict::failed) break;
    }
    report["family"] = {{"N", family->n_vertices()}, {"r", family->r()}, {"k", family->k()}, {"attempts", attempts}};
    Json verification_json = to_json(verification);
    timing["verify_wall_time_seconds"] = verification.wall_time_seconds;
    verification_json.erase("timing");
    report["verification"] = verification_json;

    stages.begin("bounds");
    Json bounds{{"desk", desk_bounds(base.graph, *f, config)}};
    if (config.q) bounds["hexagon"] = to_json(feasible_parameters(*config.q, config.k, config.c, config.d, config.rho));
    report["bounds"] = bounds;

    result.exit_code = exit_code_for(verification.verdict);
    report["exit_code"] = result.exit_code;

    if (!config.output.empty()) {
      stages.begin("output");
      const std::filesystem::path dir(config.output);
      std::filesystem::create_directories(dir);
      write_file(dir / "block_graph.txt", block_text);
      write_file(dir / "family.txt", serialized([&](std::ostream& o) { export_family(o, *family); }));
      write_file(dir / "verification.json", report["verification"].dump(2) + "\n");
      write_file(dir / "feasibility.json", report["bounds"].dump(2) + "\n");
    }
  } catch (const Error& e) {
    result.exit_code = kExitError;
    report["error"] = {{"stage", stages.current()}, {"kind", kind_name(e.kind())}, {"message", e.what()}};
    report["exit_code"] = result.exit_code;
  } catch (const std::exception& e) {
    result.exit_code = kExitError;
    report["error"] = {{"stage", stages.current()}, {"kind", "internal"}, {"message", e.what()}};
    report["exit_code"] = result.exit_code;
  }
  stages.finish();
  timing["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - started).count();
  report["timing"] = timing;
  if (!config.output.empty()) {
    try {
      std::filesystem::create_directories(config.output);
      write_file(std::filesystem::path(config.output) / "run.json", report.dump(2) + "\n");
    } catch (const std::exception&) {
      if (result.exit_code != kExitError) {
        result.exit_code = kExitError;
        report["error"] = {{"stage", "output"}, {"kind", "resource error"}, {"message", "cannot write run.json"}};
      }
    }
  }
  return result;
}

}  // namespace ramsey
