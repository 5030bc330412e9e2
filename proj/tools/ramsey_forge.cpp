// ramsey-forge: command-line front end.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ramsey/blockgraph.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/cycles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/pipeline.hpp"
#include "ramsey/report.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write '" + path + "'");
  return out;
}

// A graph argument may be a graph file, an LCF file, a bipartite file or a
// builtin base name.
SimpleGraph load_any_graph(const std::string& spec) {
  if (!std::filesystem::exists(spec) || std::filesystem::path(spec).extension() == ".lcf") {
    return load_base(spec).graph.to_simple_graph();
  }
  return load_simple_graph(spec).graph;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("list", "bad number '" + item + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

struct BaseArgs {
  std::string spec;
  std::string format = "edge-list";
  bool transpose = false;
  std::optional<unsigned> s, t, gonality;
  unsigned threads = 1;

  // short_t also accepts --t for the order, where no other --t exists.
  void add(CLI::App* app, bool required = true, bool short_t = false) {
    auto* opt = app->add_option("--in,--base", spec, "base graph: heawood, tutte-coxeter, tutte12cage, pg2-<q> or a file");
    if (required) opt->required();
    app->add_option("--format", format, "incidence file format")->check(CLI::IsMember({"edge-list", "adjacency-list"}));
    app->add_flag("--transpose", transpose, "swap the roles of A and B");
    app->add_option("--s", s, "order parameter s (B-degree minus 1)");
    app->add_option(short_t ? "--t-order,--t" : "--t-order", t, "order parameter t (A-degree minus 1)");
    app->add_option("--gonality", gonality, "polygon gonality n");
    app->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  }

  LoadedBase load() const { return load_base(spec, parse_incidence_format(format), transpose); }

  // Loads and certifies; order and gonality default to the builtin values.
  LoadedBase certified() const {
    auto base = load();
    const auto ss = s ? s : base.s, tt = t ? t : base.t, gg = gonality ? gonality : base.gonality;
    if (!ss || !tt || !gg) throw ParameterError("this base needs --s, --t-order and --gonality");
    certify_polygon(base.graph, *ss, *tt, *gg, threads);
    return base;
  }
};

struct Command {
  CLI::App* app;
  std::function<int()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random block constructions and colourings for multicolour Ramsey lower bounds", "ramsey-forge"};
  app.set_version_flag("--version", RAMSEY_FORGE_VERSION);
  app.require_subcommand(1);
  std::vector<Command> commands;
  const auto leaf = [&](CLI::App* parent, const char* name, const char* about) {
    commands.push_back({parent->add_subcommand(name, about), {}});
    return commands.size() - 1;
  };

  // geometry ---------------------------------------------------------------
  auto* geometry = app.add_subcommand("geometry", "base graphs");
  geometry->require_subcommand(1);

  BaseArgs g_build;
  std::string g_build_out, g_build_out_format = "edge-list";
  {
    auto i = leaf(geometry, "build", "write a base graph as an incidence file");
    g_build.add(commands[i].app);
    commands[i].app->add_option("--out", g_build_out, "output file (default stdout)");
    commands[i].app->add_option("--out-format", g_build_out_format)->check(CLI::IsMember({"edge-list", "adjacency-list"}));
    commands[i].run = [&] {
      const auto base = g_build.load();
      const auto fmt = parse_incidence_format(g_build_out_format);
      if (g_build_out.empty()) {
        write_incidence(std::cout, base.graph, fmt);
      } else {
        auto out = open_out(g_build_out);
        write_incidence(out, base.graph, fmt);
      }
      return kExitPassed;
    };
  }

  BaseArgs g_cert;
  {
    auto i = leaf(geometry, "certify", "check the generalized polygon axioms");
    g_cert.add(commands[i].app, true, true);
    commands[i].run = [&] {
      const auto base = g_cert.certified();
      print(to_json(*base.graph.certificate()));
      return base.graph.certificate()->valid ? kExitPassed : kExitFailed;
    };
  }

  std::string g_girth_in;
  unsigned g_girth_threads = 1;
  {
    auto i = leaf(geometry, "girth", "girth and diameter of a graph");
    commands[i].app->add_option("--in", g_girth_in, "graph file or builtin base")->required();
    commands[i].app->add_option("--threads", g_girth_threads)->check(CLI::PositiveNumber);
    commands[i].run = [&] {
      const auto g = load_any_graph(g_girth_in);
      print({{"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"girth", length_or_null(girth(g, g_girth_threads))},
             {"diameter", length_or_null(diameter(g, g_girth_threads))}});
      return kExitPassed;
    };
  }

  // block ------------------------------------------------------------------
  auto* block = app.add_subcommand("block", "random block construction");
  block->require_subcommand(1);

  BaseArgs b_build;
  std::uint64_t b_seed = 1;
  std::string b_out;
  {
    auto i = leaf(block, "build", "split every block by fair coins and join the sides");
    b_build.add(commands[i].app);
    commands[i].app->add_option("--seed", b_seed, "master seed");
    commands[i].app->add_option("--out", b_out, "block graph file (default stdout)");
    commands[i].run = [&] {
      const auto base = b_build.certified();
      const auto f = random_block_construction(base.graph, b_seed, b_build.threads);
      if (b_out.empty()) {
        write_block_graph(std::cout, f);
      } else {
        auto out = open_out(b_out);
        write_block_graph(out, f);
        print({{"vertices", f.vertex_count()}, {"edges", f.edges().size()}, {"seed", b_seed}, {"file", b_out}});
      }
      return kExitPassed;
    };
  }

  std::uint32_t b_girth = 0;
  {
    auto i = leaf(block, "forbidden", "odd cycle lengths excluded from F by the base girth");
    commands[i].app->add_option("--girth", b_girth, "girth of the base graph")->required()->check(CLI::Range(6u, kInfinite - 1));
    commands[i].run = [&] {
      print({{"girth", b_girth}, {"forbidden", guaranteed_forbidden_odd_cycles(b_girth)}});
      return kExitPassed;
    };
  }

  std::string b_edge_in;
  Vertex b_u = 0, b_v = 0;
  {
    auto i = leaf(block, "edge", "block that produced an edge of F");
    commands[i].app->add_option("--in", b_edge_in, "block graph file")->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--u", b_u)->required();
    commands[i].app->add_option("--v", b_v)->required();
    commands[i].run = [&] {
      const auto f = load_block_graph(b_edge_in);
      print({{"u", b_u}, {"v", b_v}, {"block", f.block_of_edge(b_u, b_v)}});
      return kExitPassed;
    };
  }

  // color ------------------------------------------------------------------
  auto* color = app.add_subcommand("color", "blowup copies and the min-index colouring");
  color->require_subcommand(1);

  std::string c_block, c_family, c_out;
  std::size_t c_r = 1;
  unsigned c_k = 1;
  std::uint64_t c_seed = 1;
  {
    auto i = leaf(color, "sample", "draw k random copies of the r-blowup");
    commands[i].app->add_option("--block", c_block, "block graph file")->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--r", c_r, "blowup multiplicity")->required()->check(CLI::PositiveNumber);
    commands[i].app->add_option("--k", c_k, "number of copies")->required()->check(CLI::PositiveNumber);
    commands[i].app->add_option("--seed", c_seed, "master seed");
    commands[i].app->add_option("--out", c_out, "family file (default stdout)");
    commands[i].run = [&] {
      auto f = std::make_shared<const BlockGraph>(load_block_graph(c_block));
      const auto fam = sample_coloring_family(f, c_r, c_k, c_seed);
      if (c_out.empty()) {
        export_family(std::cout, fam);
      } else {
        export_family(c_out, fam);
        print({{"N", fam.n_vertices()}, {"r", fam.r()}, {"k", fam.k()}, {"seed", c_seed}, {"file", c_out}});
      }
      return kExitPassed;
    };
  }

  std::string q_block, q_family;
  Vertex q_u = 0, q_v = 0;
  {
    auto i = leaf(color, "query", "colour of one edge of K_N");
    commands[i].app->add_option("--block", q_block)->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--family", q_family)->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--u", q_u)->required();
    commands[i].app->add_option("--v", q_v)->required();
    commands[i].run = [&] {
      auto f = std::make_shared<const BlockGraph>(load_block_graph(q_block));
      const auto fam = import_family(q_family, f);
      print({{"u", q_u}, {"v", q_v}, {"color", fam.edge_color(q_u, q_v)}});
      return kExitPassed;
    };
  }

  std::string k_block, k_family, k_out;
  Color k_color = 1;
  std::size_t k_edge_budget = kDefaultEdgeBudget;
  unsigned k_threads = 1;
  {
    auto i = leaf(color, "class", "materialize one colour class");
    commands[i].app->add_option("--block", k_block)->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--family", k_family)->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--color", k_color)->required()->check(CLI::PositiveNumber);
    commands[i].app->add_option("--edge-budget", k_edge_budget);
    commands[i].app->add_option("--threads", k_threads)->check(CLI::PositiveNumber);
    commands[i].app->add_option("--out", k_out, "edge list file (default stdout)");
    commands[i].run = [&] {
      auto f = std::make_shared<const BlockGraph>(load_block_graph(k_block));
      const auto fam = import_family(k_family, f);
      if (k_color > fam.k() + 1) throw ParameterError("colour must be in 1.." + std::to_string(fam.k() + 1));
      const auto edges = materialize_color_class(fam, k_color, std::nullopt, k_edge_budget, k_threads);
      if (k_out.empty()) {
        write_color_class(std::cout, k_color, fam.n_vertices(), edges);
      } else {
        auto out = open_out(k_out);
        write_color_class(out, k_color, fam.n_vertices(), edges);
      }
      return kExitPassed;
    };
  }

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "exact and budgeted checks");
  verify->require_subcommand(1);

  std::string v_in, v_mode = "first-witness";
  unsigned v_length = 5, v_threads = 1;
  std::uint64_t v_budget = kDefaultNodeBudget;
  {
    auto i = leaf(verify, "cycle", "search for a cycle of one length");
    commands[i].app->add_option("--in", v_in, "graph file or builtin base")->required();
    commands[i].app->add_option("--length", v_length)->required();
    commands[i].app->add_option("--mode", v_mode)->check(CLI::IsMember({"first-witness", "exhaustive-absence"}));
    commands[i].run = [&] {
      const auto result = find_cycle_of_length(load_any_graph(v_in), v_length, parse_cycle_mode(v_mode));
      print(to_json(result));
      return kExitPassed;
    };
  }
  {
    auto i = leaf(verify, "girth", "exact girth");
    commands[i].app->add_option("--in", v_in, "graph file or builtin base")->required();
    commands[i].app->add_option("--threads", v_threads)->check(CLI::PositiveNumber);
    commands[i].run = [&] {
      print({{"girth", length_or_null(girth(load_any_graph(v_in), v_threads))}});
      return kExitPassed;
    };
  }
  for (const bool clique : {true, false}) {
    auto i = leaf(verify, clique ? "clique" : "indep", clique ? "clique number" : "independence number");
    commands[i].app->add_option("--in", v_in, "graph file or builtin base")->required();
    commands[i].app->add_option("--budget", v_budget, "node expansion limit");
    commands[i].run = [&, clique] {
      const auto g = load_any_graph(v_in);
      const auto result = clique ? max_clique(g, v_budget) : independence_number(g, v_budget);
      Json doc = to_json(result);
      doc["witness_valid"] = clique ? is_clique(g, result.witness) : is_independent_set(g, result.witness);
      print(doc);
      return result.exact() ? kExitPassed : kExitIndeterminate;
    };
  }

  std::string f_block, f_family;
  unsigned f_target = 5, f_threads = 1;
  std::size_t f_m = 0;
  VerifyBudget f_budget;
  {
    auto i = leaf(verify, "family", "verify a sampled colouring");
    commands[i].app->add_option("--block", f_block)->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--family", f_family)->required()->check(CLI::ExistingFile);
    commands[i].app->add_option("--target-cycle", f_target)->check(CLI::IsMember({5u, 7u}));
    commands[i].app->add_option("--m", f_m, "forbidden clique size in colour k+1")->required();
    commands[i].app->add_option("--node-budget", f_budget.node_expansions);
    commands[i].app->add_option("--edge-budget", f_budget.edge_budget);
    commands[i].app->add_option("--sample-pairs", f_budget.sample_pairs);
    commands[i].app->add_option("--threads", f_threads)->check(CLI::PositiveNumber);
    commands[i].run = [&] {
      auto f = std::make_shared<const BlockGraph>(load_block_graph(f_block));
      const auto fam = import_family(f_family, f);
      const auto report = verify_family(fam, f_target, f_m, f_budget, f_threads);
      print(to_json(report));
      return exit_code_for(report.verdict);
    };
  }

  BaseArgs mc_base;
  unsigned mc_ta = 2;
  std::size_t mc_samples = 10'000;
  std::uint64_t mc_seed = 1;
  {
    auto i = leaf(verify, "mc", "Monte Carlo estimate of the per-block independence probability");
    mc_base.add(commands[i].app);
    commands[i].app->add_option("--t-a", mc_ta, "subset size inside one block")->required();
    commands[i].app->add_option("--samples", mc_samples);
    commands[i].app->add_option("--seed", mc_seed);
    commands[i].run = [&] {
      const auto est = block_independence_mc(mc_base.load().graph, mc_ta, mc_samples, mc_seed);
      print(to_json(est));
      return kExitPassed;
    };
  }

  // bounds -----------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "log-domain counting inequalities");
  bounds->require_subcommand(1);

  double bq = 2, bc = 1, bd = 1, brho = 1;
  unsigned bk = 2;
  std::string bformat = "json";
  {
    auto i = leaf(bounds, "feasible", "one parameter point at hexagon scale");
    commands[i].app->add_option("--q", bq)->required();
    commands[i].app->add_option("--k", bk)->required();
    commands[i].app->add_option("--c", bc);
    commands[i].app->add_option("--d", bd);
    commands[i].app->add_option("--rho", brho);
    commands[i].app->add_option("--format", bformat)->check(CLI::IsMember({"json", "csv"}));
    commands[i].run = [&] {
      const auto rep = feasible_parameters(bq, bk, bc, bd, brho);
      if (bformat == "csv") {
        std::cout << kFeasibilityCsvHeader << '\n';
        write_feasibility_csv_row(std::cout, rep);
      } else {
        print(to_json(rep));
      }
      return kExitPassed;
    };
  }

  std::string grid_c = "0.5,1,2", grid_d = "0.5,1,2", grid_rho = "0.5,1,2", scan_qs = "2,8,32,128,512";
  std::string scan_format = "csv";
  const auto grid = [&] { return ConstantGrid{parse_list(grid_c), parse_list(grid_d), parse_list(grid_rho)}; };
  const auto add_grid = [&](CLI::App* a) {
    a->add_option("--c", grid_c, "comma separated grid for c");
    a->add_option("--d", grid_d, "comma separated grid for d");
    a->add_option("--rho", grid_rho, "comma separated grid for rho");
  };
  {
    auto i = leaf(bounds, "scan", "best margin per q over a constant grid");
    commands[i].app->add_option("--k", bk)->required();
    commands[i].app->add_option("--q", scan_qs, "comma separated q values");
    add_grid(commands[i].app);
    commands[i].app->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}));
    commands[i].run = [&] {
      const auto scan = scan_margins(parse_list(scan_qs), bk, grid());
      if (scan_format == "json") {
        print(to_json(scan));
      } else {
        std::cout << kFeasibilityCsvHeader << '\n';
        for (const auto& row : scan.rows) write_feasibility_csv_row(std::cout, row.best);
        std::cout << "# crossing_q=" << (scan.crossing_q ? std::to_string(*scan.crossing_q) : "none")
                  << " increasing_after_crossing=" << (scan.increasing_after_crossing ? "true" : "false") << '\n';
      }
      return kExitPassed;
    };
  }
  {
    auto i = leaf(bounds, "solve", "grid search for (c, d, rho) at one q");
    commands[i].app->add_option("--q", bq)->required();
    commands[i].app->add_option("--k", bk)->required();
    add_grid(commands[i].app);
    commands[i].run = [&] {
      print(to_json(solve_constants(bq, bk, grid())));
      return kExitPassed;
    };
  }

  unsigned s_cycle = 5;
  std::string s_ms = "1e3,1e4,1e5,1e6";
  {
    auto i = leaf(bounds, "scaling", "lower-bound growth table");
    commands[i].app->add_option("--k", bk)->required();
    commands[i].app->add_option("--cycle", s_cycle)->check(CLI::IsMember({5u, 7u}));
    commands[i].app->add_option("--m", s_ms, "comma separated m values");
    commands[i].app->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}));
    commands[i].run = [&] {
      const auto rows = scaling_table(bk, s_cycle, parse_list(s_ms));
      if (scan_format == "json") {
        print(to_json(bk, s_cycle, rows));
      } else {
        write_scaling_csv(std::cout, rows);
      }
      return kExitPassed;
    };
  }

  BaseArgs e_base;
  std::size_t e_t = 1, e_samples = 10'000;
  std::string e_profile = "paper-product";
  std::uint64_t e_seed = 1;
  {
    auto i = leaf(bounds, "indep", "expected number of independent t-sets in F");
    e_base.add(commands[i].app);
    commands[i].app->add_option("--t", e_t)->required();
    commands[i].app->add_option("--profile", e_profile)->check(CLI::IsMember({"paper-product", "monte-carlo"}));
    commands[i].app->add_option("--samples", e_samples);
    commands[i].app->add_option("--seed", e_seed);
    commands[i].run = [&] {
      print(to_json(expected_independent_sets_log(e_base.load().graph, e_t, parse_profile(e_profile), e_samples, e_seed)));
      return kExitPassed;
    };
  }

  // pipeline ---------------------------------------------------------------
  auto* pipeline = app.add_subcommand("pipeline", "end-to-end run");
  pipeline->require_subcommand(1);
  RunConfig rc;
  std::string rc_config;
  {
    auto i = leaf(pipeline, "run", "certify, build, colour, verify and evaluate bounds");
    auto* a = commands[i].app;
    a->add_option("--config", rc_config, "take the config from a report or config JSON; other flags override")
        ->check(CLI::ExistingFile);
    a->add_option("--base", rc.base, "base graph");
    a->add_option("--base-format", rc.base_format)->check(CLI::IsMember({"edge-list", "adjacency-list"}));
    a->add_flag("--transpose", rc.transpose);
    a->add_option("--s", rc.s);
    a->add_option("--t-order", rc.t_order);
    a->add_option("--gonality", rc.gonality);
    a->add_option("--target-cycle", rc.target_cycle);
    a->add_option("--k", rc.k)->check(CLI::PositiveNumber);
    a->add_option("--r", rc.r)->check(CLI::PositiveNumber);
    a->add_option("--m", rc.m);
    a->add_option("--t", rc.t, "desk-scale t (default alpha(F) + 1)");
    a->add_option("--q", rc.q, "also evaluate hexagon-scale feasibility at this q");
    a->add_option("--c", rc.c);
    a->add_option("--d", rc.d);
    a->add_option("--rho", rc.rho);
    a->add_option("--seed", rc.seed);
    a->add_option("--retries", rc.retries, "resample the family after a failed verification");
    a->add_option("--node-budget", rc.budget.node_expansions);
    a->add_option("--edge-budget", rc.budget.edge_budget);
    a->add_option("--sample-pairs", rc.budget.sample_pairs);
    a->add_option("--mc-samples", rc.mc_samples);
    a->add_option("--out", rc.output, "directory for report files");
    a->add_option("--threads", rc.threads)->check(CLI::PositiveNumber);
    commands[i].run = [&, a] {
      RunConfig config = rc;
      if (!rc_config.empty()) {
        std::ifstream in(rc_config);
        Json doc;
        try {
          doc = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw FormatError(std::string("cannot parse ") + rc_config + ": " + e.what());
        }
        config = run_config_from_json(doc);
        // Explicit flags win over the file.
        const auto given = [&](const char* flag) { return a->count(flag) > 0; };
        if (given("--out")) config.output = rc.output;
        if (given("--threads")) config.threads = rc.threads;
        if (given("--seed")) config.seed = rc.seed;
        if (given("--base")) config.base = rc.base;
        if (given("--k")) config.k = rc.k;
        if (given("--r")) config.r = rc.r;
        if (given("--m")) config.m = rc.m;
      }
      auto result = run_pipeline(config);
      print(result.report);
      if (result.report.contains("error")) {
        const auto& e = result.report["error"];
        std::cerr << "ramsey-forge: stage " << e["stage"].get<std::string>() << ": " << e["kind"].get<std::string>()
                  << ": " << e["message"].get<std::string>() << '\n';
      }
      return result.exit_code;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto& command : commands) {
    if (!command.app->parsed()) continue;
    try {
      return command.run();
    } catch (const CLI::ParseError& e) {
      std::cerr << "ramsey-forge: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      std::cerr << "ramsey-forge: " << kind_name(e.kind()) << ": " << e.what() << '\n';
      return kExitError;
    } catch (const std::exception& e) {
      std::cerr << "ramsey-forge: " << e.what() << '\n';
      return kExitError;
    }
  }
  return kExitUsage;
}
