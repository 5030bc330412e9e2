#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/pipeline.hpp"

using namespace ramsey;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunConfig small_run() {
  RunConfig c;
  c.base = "tutte12cage";
  c.r = 2;
  c.k = 2;
  c.m = 60;
  c.seed = 21;
  c.mc_samples = 2000;
  return c;
}

}  // namespace

TEST_CASE("target cycle resolution") {
  CHECK(resolve_target_cycle(12, std::nullopt) == 5);
  CHECK(resolve_target_cycle(12, 5u) == 5);
  CHECK(resolve_target_cycle(16, 5u) == 5);
  CHECK(resolve_target_cycle(16, 7u) == 7);
  CHECK_THROWS_AS(resolve_target_cycle(16, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(resolve_target_cycle(12, 7u), PreconditionError);
  CHECK_THROWS_AS(resolve_target_cycle(8, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(resolve_target_cycle(6, 5u), PreconditionError);
  CHECK_THROWS_AS(resolve_target_cycle(16, 9u), ParameterError);
  CHECK(exit_code_for(Verdict::passed) == 0);
  CHECK(exit_code_for(Verdict::indeterminate) == 2);
  CHECK(exit_code_for(Verdict::failed) == 3);
}

TEST_CASE("builtin bases") {
  const auto h = load_base("heawood");
  CHECK(h.graph.part_a_size() == 7);
  CHECK(h.gonality == 3u);
  CHECK(h.sha256.size() == 64);
  const auto pg = load_base("pg2-4");
  CHECK(pg.graph.part_a_size() == 21);
  CHECK(pg.s == 4u);
  CHECK(pg.source == "generated");
  CHECK_THROWS_AS(load_base("pg2-x"), ParameterError);
  CHECK_THROWS_AS(load_base("no-such-thing"), LookupError);
}

TEST_CASE("run config JSON round trip") {
  auto c = small_run();
  c.q = 8;
  c.t = 30;
  c.target_cycle = 5;
  c.budget.sample_pairs = 1234;
  const auto j = to_json(c);
  const auto back = run_config_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(run_config_from_json(Json{{"config", j}}).budget.sample_pairs == 1234);
  CHECK_THROWS_AS(run_config_from_json(Json{{"base", "x"}}), FormatError);
  CHECK_FALSE(j.contains("threads"));
}

TEST_CASE("pipeline errors name the stage") {
  auto c = small_run();
  c.base = "heawood";
  c.target_cycle = 5;
  const auto res = run_pipeline(c);
  CHECK(res.exit_code == kExitError);
  CHECK(res.report["error"]["stage"] == "target-cycle");
  CHECK(res.report["error"]["message"].get<std::string>().find("base girth 6 < 12") != std::string::npos);

  c = small_run();
  c.base = "pg2-5";
  c.gonality = 6;
  const auto bad = run_pipeline(c);
  CHECK(bad.exit_code == kExitError);
  CHECK(bad.report["error"]["stage"] == "geometry");
}

TEST_CASE("pipeline output does not depend on the thread count") {
  const auto root = std::filesystem::temp_directory_path() / "ramsey_pipeline_test";
  std::filesystem::remove_all(root);
  auto c = small_run();
  c.q = 32;
  c.output = (root / "one").string();
  auto one = run_pipeline(c);
  c.threads = 3;
  c.output = (root / "three").string();
  auto three = run_pipeline(c);
  CHECK(one.exit_code == three.exit_code);
  CHECK(one.exit_code != kExitError);
  for (const char* name : {"block_graph.txt", "family.txt", "verification.json", "feasibility.json"}) {
    CAPTURE(name);
    CHECK(slurp(root / "one" / name) == slurp(root / "three" / name));
  }
  strip_timing(one.report);
  strip_timing(three.report);
  CHECK(one.report.dump() == three.report.dump());
  CHECK(one.report["bounds"].contains("hexagon"));

  // A rerun from the recorded config reproduces the report.
  auto again_cfg = run_config_from_json(Json::parse(slurp(root / "one" / "run.json")));
  auto again = run_pipeline(again_cfg);
  strip_timing(again.report);
  CHECK(again.report.dump() == one.report.dump());
  std::filesystem::remove_all(root);
}
