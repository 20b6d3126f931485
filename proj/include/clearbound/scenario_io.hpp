#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "clearbound/planner.hpp"

namespace clearbound {

struct HeuristicConfig {
  SearchMode mode = SearchMode::InformedLazy;
  int k_interior = 0;
};

// One scenario: world geometry, query endpoints, and planner settings.
// The on-disk form is strict JSON; unknown fields are rejected.
struct ScenarioFile {
  int version = 1;
  int dimension = 0;
  std::optional<AxisAlignedBox> bounds;
  bool bounds_are_obstacles = false;
  std::vector<Obstacle> obstacles;
  State start;
  State goal;
  GraphParams graph;
  QuadratureConfig quadrature;
  HeuristicConfig heuristic;

  World world() const;
};

// Parse and fully validate scenario text. `origin` labels diagnostics.
ScenarioFile parse_scenario(const std::string& text, const std::string& origin = "<string>");

ScenarioFile load_scenario(const std::filesystem::path& path);

// Canonical serialization: fixed key order, all defaulted fields explicit.
// load(save(load(x))) == load(x), and canonical output is a fixed point.
std::string canonical_scenario_json(const ScenarioFile& scenario);

void save_scenario(const ScenarioFile& scenario, const std::filesystem::path& path);

// FNV-1a 64 content hash of the canonical serialization.
std::string scenario_digest(const ScenarioFile& scenario);

struct ModeRecord {
  SearchMode mode;
  SearchResult result;
};

struct EdgeLogEntry {
  int from = 0;
  int to = 0;
  double cost = 0.0;
};

// Result file: tool version, scenario digest, one record per mode, optional
// per-edge evaluation log.
std::string result_json(const ScenarioFile& scenario, const std::vector<ModeRecord>& records,
                        const std::vector<EdgeLogEntry>* edge_log = nullptr);

// Digest embedded in a result file; throws InputError when absent.
std::string result_file_digest(const std::string& result_text);

// `value` with `digits` significant digits, trailing zeros kept,
// locale-independent. digits=12: ln 2 -> "0.693147180560".
std::string format_significant(double value, int digits = 12);

// CLI driver. Exit codes: 0 success, 1 usage error, 2 input error,
// 3 numerical-convergence error.
int run_cli(int argc, const char* const* argv);

}  // namespace clearbound
