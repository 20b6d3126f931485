#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clearbound/scenario_io.hpp"
#include "clearbound/svg_render.hpp"

namespace clearbound {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;

std::uint64_t seed_override_or(std::uint64_t scenario_seed) {
  const char* raw = std::getenv("CLEARBOUND_SEED_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return scenario_seed;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw InputError(std::string("CLEARBOUND_SEED_OVERRIDE is not an integer: ") + raw);
  }
  return static_cast<std::uint64_t>(value);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<ClearanceSample> parse_sample_list(const std::string& text) {
  std::vector<ClearanceSample> samples;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw InputError("--samples expects comma-separated t:d pairs, got '" + item + "'");
    }
    try {
      samples.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw InputError("--samples has a non-numeric entry: '" + item + "'");
    }
  }
  if (samples.empty()) throw InputError("--samples must contain at least one t:d pair");
  return samples;
}

struct PlanArgs {
  std::string scenario;
  std::string mode;
  std::string out;
  std::string svg;
  bool edge_log = false;
};

int run_plan(const PlanArgs& args) {
  ScenarioFile scenario = load_scenario(args.scenario);
  scenario.graph.seed = seed_override_or(scenario.graph.seed);
  const SearchMode mode =
      args.mode.empty() ? scenario.heuristic.mode : parse_search_mode(args.mode);
  const World world = scenario.world();
  const GeometricGraph graph = build_graph(world, scenario.start, scenario.goal, scenario.graph);
  const SearchConfig cfg{scenario.quadrature, scenario.heuristic.k_interior};
  const SearchResult result = search(graph, world, mode, cfg);

  std::vector<EdgeLogEntry> log;
  std::vector<EdgeLogEntry>* log_ptr = nullptr;
  if (args.edge_log && result.path) {
    const auto& waypoints = result.path->waypoints();
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
      log.push_back({static_cast<int>(i), static_cast<int>(i + 1),
                     edge_cost_exact(world, waypoints[i], waypoints[i + 1], scenario.quadrature)});
    }
    log_ptr = &log;
  }

  write_file(args.out, result_json(scenario, {{mode, result}}, log_ptr));
  if (!args.svg.empty()) {
    try {
      write_file(args.svg, render_svg(world, &graph, result.path ? &*result.path : nullptr));
    } catch (const RenderError& e) {
      std::cerr << "svg skipped: " << e.what() << "\n";
    }
  }
  std::cout << to_string(mode) << " cost "
            << (std::isfinite(result.cost) ? format_significant(result.cost) : "inf") << "\n";
  return kExitOk;
}

struct BoundArgs {
  std::string kind;
  double d1 = 0.0;
  double d2 = 0.0;
  double lhat = 0.0;
  double t1 = 0.0;
  double l = 0.0;
  std::string samples;
  bool strict = false;
};

int run_bound(const BoundArgs& args, const CLI::App& cmd) {
  auto require = [&](const char* flag) {
    if (cmd.count(flag) == 0) {
      throw InputError(std::string("bound --kind ") + args.kind + " requires " + flag);
    }
  };
  CostBound bound{};
  const SampleCheck check = args.strict ? SampleCheck::Strict : SampleCheck::Permissive;
  if (args.kind == "one-endpoint") {
    require("--d1");
    require("--lhat");
    bound = bound_one_endpoint(args.d1, args.lhat);
  } else if (args.kind == "two-endpoint") {
    require("--d1");
    require("--d2");
    require("--lhat");
    bound = bound_two_endpoint(args.d1, args.d2, args.lhat);
  } else if (args.kind == "single-sample") {
    require("--d1");
    require("--t1");
    require("--l");
    bound = bound_single_sample(args.d1, args.t1, args.l);
  } else if (args.kind == "multi-sample") {
    require("--samples");
    require("--l");
    bound = bound_multi_sample(parse_sample_list(args.samples), args.l, check);
  } else if (args.kind == "chain") {
    require("--samples");
    require("--l");
    bound = bound_endpoint_chain(parse_sample_list(args.samples), args.l, check);
  } else {
    throw InputError("unknown bound kind: " + args.kind);
  }
  std::cout << format_significant(bound.value) << "\n";
  return kExitOk;
}

int run_validate(const std::string& path) {
  const ScenarioFile scenario = load_scenario(path);
  std::cout << "valid " << scenario_digest(scenario) << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string scenario_dir;
  std::string out;
  std::string results_dir;
};

int run_bench(const BenchArgs& args) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(args.scenario_dir)) {
    throw InputError("not a directory: " + args.scenario_dir);
  }
  for (const auto& entry : std::filesystem::directory_iterator(args.scenario_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no .json scenarios in " + args.scenario_dir);

  constexpr SearchMode kModes[] = {SearchMode::Uninformed, SearchMode::Informed,
                                   SearchMode::InformedLazy};
  std::ostringstream csv;
  csv << "scenario,mode,cost,expansions,exact_edge_evals,heuristic_evals,wall_time_s\n";
  for (const auto& file : files) {
    ScenarioFile scenario = load_scenario(file);
    scenario.graph.seed = seed_override_or(scenario.graph.seed);
    const std::string digest = scenario_digest(scenario);

    std::filesystem::path result_path;
    if (!args.results_dir.empty()) {
      std::filesystem::create_directories(args.results_dir);
      result_path = std::filesystem::path(args.results_dir) / (file.stem().string() + ".json");
      // Never mix results from a different scenario revision.
      if (std::filesystem::exists(result_path)) {
        const std::string existing = result_file_digest(read_file(result_path));
        if (existing != digest) {
          throw InputError("results file " + result_path.string() + " was produced for digest " +
                           existing + ", scenario now has " + digest);
        }
      }
    }

    const World world = scenario.world();
    const GeometricGraph graph =
        build_graph(world, scenario.start, scenario.goal, scenario.graph);
    const SearchConfig cfg{scenario.quadrature, scenario.heuristic.k_interior};
    std::vector<ModeRecord> records;
    for (const SearchMode mode : kModes) {
      records.push_back({mode, search(graph, world, mode, cfg)});
      const auto& r = records.back();
      csv << file.stem().string() << "," << to_string(mode) << ","
          << (std::isfinite(r.result.cost) ? format_significant(r.result.cost) : "inf") << ","
          << r.result.stats.vertex_expansions << "," << r.result.stats.exact_edge_evals << ","
          << r.result.stats.heuristic_evals << ",";
      char wall[32];
      std::snprintf(wall, sizeof(wall), "%.6f", r.result.stats.wall_seconds);
      csv << wall << "\n";
    }
    if (!result_path.empty()) {
      write_file(result_path, result_json(scenario, records));
    }
  }
  write_file(args.out, csv.str());
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Admissible clearance-cost heuristics and informed planning"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "Plan on a scenario and write a result file");
  plan_cmd->add_option("--scenario", plan_args.scenario, "Scenario JSON file")->required();
  plan_cmd->add_option("--mode", plan_args.mode,
                       "uninformed | informed | informed_lazy (default: scenario setting)");
  plan_cmd->add_option("--out", plan_args.out, "Result JSON output path")->required();
  plan_cmd->add_option("--svg", plan_args.svg, "Optional SVG rendering output path");
  plan_cmd->add_flag("--edge-log", plan_args.edge_log, "Embed per-edge costs of the solution");

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a cost bound and print it");
  bound_cmd
      ->add_option("--kind", bound_args.kind,
                   "one-endpoint | two-endpoint | single-sample | multi-sample | chain")
      ->required();
  bound_cmd->add_option("--d1", bound_args.d1, "Clearance of the first known state");
  bound_cmd->add_option("--d2", bound_args.d2, "Clearance of the second endpoint");
  bound_cmd->add_option("--lhat", bound_args.lhat, "Lower bound on arc length");
  bound_cmd->add_option("--t1", bound_args.t1, "Arc-length position of the sample");
  bound_cmd->add_option("--l", bound_args.l, "Exact arc length of the path");
  bound_cmd->add_option("--samples", bound_args.samples, "Comma-separated t:d pairs");
  bound_cmd->add_flag("--strict", bound_args.strict, "Reject inconsistent sample sequences");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  validate_cmd->add_option("--scenario", validate_path, "Scenario JSON file")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run all modes over a scenario directory");
  bench_cmd->add_option("--scenario-dir", bench_args.scenario_dir, "Directory of scenarios")
      ->required();
  bench_cmd->add_option("--out", bench_args.out, "Comparison table CSV path")->required();
  bench_cmd->add_option("--results-dir", bench_args.results_dir,
                        "Also write per-scenario result files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(plan_cmd)) return run_plan(plan_args);
    if (app.got_subcommand(bound_cmd)) return run_bound(bound_args, *bound_cmd);
    if (app.got_subcommand(validate_cmd)) return run_validate(validate_path);
    if (app.got_subcommand(bench_cmd)) return run_bench(bench_args);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace clearbound
