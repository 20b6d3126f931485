#include "clearbound/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clearbound/version.hpp"

namespace clearbound {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw InputError(origin + ": " + message);
}

// Strict schema: every object must carry exactly the known keys.
void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const std::string& origin) {
  if (!obj.is_object()) fail(origin, where + " must be an object");
  for (const char* key : required) {
    if (!obj.contains(key)) fail(origin, where + " is missing field '" + key + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    const bool known =
        std::any_of(required.begin(), required.end(), [&](const char* k) { return key == k; }) ||
        std::any_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; });
    if (!known) fail(origin, where + " has unknown field '" + key + "'");
  }
}

State parse_state(const json& j, const std::string& where, int dimension,
                  const std::string& origin) {
  if (!j.is_array()) fail(origin, where + " must be an array of numbers");
  if (dimension >= 0 && static_cast<int>(j.size()) != dimension) {
    std::ostringstream msg;
    msg << where << " must have " << dimension << " coordinates, got " << j.size();
    fail(origin, msg.str());
  }
  State x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(origin, where + " must contain only numbers");
    x[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  if (!x.allFinite()) fail(origin, where + " must be finite");
  return x;
}

ordered_json state_to_json(const State& x) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(x[i]);
  return arr;
}

Obstacle parse_obstacle(const json& j, const std::string& where, int dimension,
                        const std::string& origin) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    fail(origin, where + " must be an object with a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "hypersphere") {
    check_keys(j, where, {"type", "center", "radius"}, {}, origin);
    if (!j["radius"].is_number()) fail(origin, where + ".radius must be a number");
    return Hypersphere{parse_state(j["center"], where + ".center", dimension, origin),
                       j["radius"].get<double>()};
  }
  if (type == "box") {
    check_keys(j, where, {"type", "min", "max"}, {}, origin);
    return AxisAlignedBox{parse_state(j["min"], where + ".min", dimension, origin),
                          parse_state(j["max"], where + ".max", dimension, origin)};
  }
  if (type == "half_space") {
    check_keys(j, where, {"type", "normal", "offset"}, {}, origin);
    if (!j["offset"].is_number()) fail(origin, where + ".offset must be a number");
    return HalfSpace{parse_state(j["normal"], where + ".normal", dimension, origin),
                     j["offset"].get<double>()};
  }
  fail(origin, where + " has unknown obstacle type '" + type + "'");
}

ordered_json obstacle_to_json(const Obstacle& obstacle) {
  ordered_json j;
  if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
    j["type"] = "hypersphere";
    j["center"] = state_to_json(sphere->center);
    j["radius"] = sphere->radius;
  } else if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
    j["type"] = "box";
    j["min"] = state_to_json(box->min_corner);
    j["max"] = state_to_json(box->max_corner);
  } else {
    const auto& half = std::get<HalfSpace>(obstacle);
    j["type"] = "half_space";
    j["normal"] = state_to_json(half.normal);
    j["offset"] = half.offset;
  }
  return j;
}

int parse_int(const json& j, const std::string& where, const std::string& origin) {
  if (!j.is_number_integer()) fail(origin, where + " must be an integer");
  return j.get<int>();
}

double parse_double(const json& j, const std::string& where, const std::string& origin) {
  if (!j.is_number()) fail(origin, where + " must be a number");
  return j.get<double>();
}

}  // namespace

World ScenarioFile::world() const {
  return World(dimension, obstacles, bounds, bounds_are_obstacles);
}

ScenarioFile parse_scenario(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Recover the line number from the byte offset for the diagnostic.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) {
      if (text[i] == '\n') ++line;
    }
    std::ostringstream msg;
    msg << "JSON parse error at line " << line << ": " << e.what();
    fail(origin, msg.str());
  }

  check_keys(root, "scenario", {"version", "dimension", "obstacles", "start", "goal", "graph"},
             {"bounds", "bounds_are_obstacles", "quadrature", "heuristic"}, origin);

  ScenarioFile s;
  s.version = parse_int(root["version"], "version", origin);
  if (s.version != 1) fail(origin, "unsupported scenario version");
  s.dimension = parse_int(root["dimension"], "dimension", origin);
  if (s.dimension < 1) fail(origin, "dimension must be at least 1");

  if (root.contains("bounds") && !root["bounds"].is_null()) {
    check_keys(root["bounds"], "bounds", {"min", "max"}, {}, origin);
    s.bounds = AxisAlignedBox{parse_state(root["bounds"]["min"], "bounds.min", s.dimension, origin),
                              parse_state(root["bounds"]["max"], "bounds.max", s.dimension, origin)};
  }
  if (root.contains("bounds_are_obstacles")) {
    if (!root["bounds_are_obstacles"].is_boolean()) {
      fail(origin, "bounds_are_obstacles must be a boolean");
    }
    s.bounds_are_obstacles = root["bounds_are_obstacles"].get<bool>();
  }

  if (!root["obstacles"].is_array()) fail(origin, "obstacles must be an array");
  for (std::size_t i = 0; i < root["obstacles"].size(); ++i) {
    std::ostringstream where;
    where << "obstacles[" << i << "]";
    s.obstacles.push_back(parse_obstacle(root["obstacles"][i], where.str(), s.dimension, origin));
  }

  s.start = parse_state(root["start"], "start", s.dimension, origin);
  s.goal = parse_state(root["goal"], "goal", s.dimension, origin);

  const json& graph = root["graph"];
  check_keys(graph, "graph", {"n_vertices", "radius", "seed"}, {}, origin);
  s.graph.n_vertices = parse_int(graph["n_vertices"], "graph.n_vertices", origin);
  if (s.graph.n_vertices < 0) fail(origin, "graph.n_vertices must be non-negative");
  s.graph.radius = parse_double(graph["radius"], "graph.radius", origin);
  if (!(s.graph.radius > 0.0)) fail(origin, "graph.radius must be positive");
  if (!graph["seed"].is_number_unsigned() && !graph["seed"].is_number_integer()) {
    fail(origin, "graph.seed must be an integer");
  }
  if (graph["seed"].is_number_integer() && graph["seed"].get<std::int64_t>() < 0) {
    fail(origin, "graph.seed must be non-negative");
  }
  s.graph.seed = graph["seed"].get<std::uint64_t>();

  if (root.contains("quadrature")) {
    const json& q = root["quadrature"];
    check_keys(q, "quadrature", {"rel_tol", "abs_tol", "max_depth"}, {}, origin);
    s.quadrature.rel_tol = parse_double(q["rel_tol"], "quadrature.rel_tol", origin);
    s.quadrature.abs_tol = parse_double(q["abs_tol"], "quadrature.abs_tol", origin);
    s.quadrature.max_depth = parse_int(q["max_depth"], "quadrature.max_depth", origin);
  }
  try {
    validate_quadrature_config(s.quadrature);
  } catch (const InputError& e) {
    fail(origin, e.what());
  }

  if (root.contains("heuristic")) {
    const json& h = root["heuristic"];
    check_keys(h, "heuristic", {"mode", "k_interior"}, {}, origin);
    if (!h["mode"].is_string()) fail(origin, "heuristic.mode must be a string");
    try {
      s.heuristic.mode = parse_search_mode(h["mode"].get<std::string>());
    } catch (const InputError& e) {
      fail(origin, e.what());
    }
    s.heuristic.k_interior = parse_int(h["k_interior"], "heuristic.k_interior", origin);
    if (s.heuristic.k_interior < 0) fail(origin, "heuristic.k_interior must be non-negative");
  }

  // Geometric validation: build the world, then check the query endpoints.
  World world = [&] {
    try {
      return s.world();
    } catch (const InputError& e) {
      fail(origin, e.what());
    }
  }();
  if (!world.is_valid(s.start)) fail(origin, "field 'start': state is inside an obstacle");
  if (!world.is_valid(s.goal)) fail(origin, "field 'goal': state is inside an obstacle");
  if (s.graph.n_vertices > 0 && !s.bounds) {
    fail(origin, "graph.n_vertices > 0 requires bounds to sample in");
  }
  return s;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open scenario file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string());
}

std::string canonical_scenario_json(const ScenarioFile& s) {
  ordered_json j;
  j["version"] = s.version;
  j["dimension"] = s.dimension;
  if (s.bounds) {
    ordered_json b;
    b["min"] = state_to_json(s.bounds->min_corner);
    b["max"] = state_to_json(s.bounds->max_corner);
    j["bounds"] = std::move(b);
  }
  j["bounds_are_obstacles"] = s.bounds_are_obstacles;
  j["obstacles"] = ordered_json::array();
  for (const auto& obstacle : s.obstacles) j["obstacles"].push_back(obstacle_to_json(obstacle));
  j["start"] = state_to_json(s.start);
  j["goal"] = state_to_json(s.goal);
  ordered_json g;
  g["n_vertices"] = s.graph.n_vertices;
  g["radius"] = s.graph.radius;
  g["seed"] = s.graph.seed;
  j["graph"] = std::move(g);
  ordered_json q;
  q["rel_tol"] = s.quadrature.rel_tol;
  q["abs_tol"] = s.quadrature.abs_tol;
  q["max_depth"] = s.quadrature.max_depth;
  j["quadrature"] = std::move(q);
  ordered_json h;
  h["mode"] = to_string(s.heuristic.mode);
  h["k_interior"] = s.heuristic.k_interior;
  j["heuristic"] = std::move(h);
  return j.dump(2) + "\n";
}

void save_scenario(const ScenarioFile& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write scenario file: " + path.string());
  out << canonical_scenario_json(scenario);
}

namespace {

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string scenario_digest(const ScenarioFile& scenario) {
  return fnv1a64_hex(canonical_scenario_json(scenario));
}

std::string result_json(const ScenarioFile& scenario, const std::vector<ModeRecord>& records,
                        const std::vector<EdgeLogEntry>* edge_log) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["scenario_digest"] = scenario_digest(scenario);
  ordered_json results;
  for (const auto& record : records) {
    ordered_json r;
    const bool found = std::isfinite(record.result.cost);
    r["found"] = found;
    if (found) {
      r["cost"] = record.result.cost;
    } else {
      r["cost"] = nullptr;
    }
    if (record.result.path) {
      ordered_json waypoints = ordered_json::array();
      for (const auto& w : record.result.path->waypoints()) waypoints.push_back(state_to_json(w));
      r["path"] = std::move(waypoints);
    } else {
      r["path"] = nullptr;
    }
    ordered_json stats;
    stats["vertex_expansions"] = record.result.stats.vertex_expansions;
    stats["exact_edge_evals"] = record.result.stats.exact_edge_evals;
    stats["heuristic_evals"] = record.result.stats.heuristic_evals;
    stats["wall_seconds"] = record.result.stats.wall_seconds;
    r["stats"] = std::move(stats);
    results[to_string(record.mode)] = std::move(r);
  }
  j["results"] = std::move(results);
  if (edge_log) {
    ordered_json log = ordered_json::array();
    for (const auto& entry : *edge_log) {
      ordered_json e;
      e["from"] = entry.from;
      e["to"] = entry.to;
      e["cost"] = std::isfinite(entry.cost) ? ordered_json(entry.cost) : ordered_json(nullptr);
      log.push_back(std::move(e));
    }
    j["edge_log"] = std::move(log);
  }
  return j.dump(2) + "\n";
}

std::string result_file_digest(const std::string& result_text) {
  json root;
  try {
    root = json::parse(result_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("result file: JSON parse error: ") + e.what());
  }
  if (!root.is_object() || !root.contains("scenario_digest") ||
      !root["scenario_digest"].is_string()) {
    throw InputError("result file: missing scenario_digest");
  }
  return root["scenario_digest"].get<std::string>();
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.*g", digits, value);
  return buf;
}

}  // namespace clearbound
