#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "clearbound/scenario_io.hpp"
#include "clearbound/svg_render.hpp"

using namespace clearbound;

namespace {

const char* kMinimalScenario = R"json({
  "version": 1,
  "dimension": 2,
  "bounds": {"min": [0, 0], "max": [1, 1]},
  "obstacles": [
    {"type": "hypersphere", "center": [0.5, 0.5], "radius": 0.2}
  ],
  "start": [0.1, 0.1],
  "goal": [0.9, 0.9],
  "graph": {"n_vertices": 50, "radius": 0.3, "seed": 7}
})json";

State make_state(std::initializer_list<double> coords) {
  State x(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) x[i++] = c;
  return x;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

double attribute_value(const std::string& svg, const std::string& attr) {
  const auto pos = svg.find(attr + "=\"");
  REQUIRE(pos != std::string::npos);
  return std::stod(svg.substr(pos + attr.size() + 2));
}

}  // namespace

TEST_CASE("scenario parsing and canonical form") {
  const ScenarioFile scenario = parse_scenario(kMinimalScenario);
  CHECK(scenario.dimension == 2);
  CHECK(scenario.obstacles.size() == 1);
  CHECK(scenario.graph.n_vertices == 50);
  CHECK(scenario.heuristic.mode == SearchMode::InformedLazy);  // default
  CHECK(scenario.quadrature.rel_tol == 1e-9);

  // Canonical serialization is a fixed point of load-save.
  const std::string canonical = canonical_scenario_json(scenario);
  const ScenarioFile reparsed = parse_scenario(canonical);
  CHECK(canonical_scenario_json(reparsed) == canonical);
  CHECK(scenario_digest(reparsed) == scenario_digest(scenario));
}

TEST_CASE("scenario schema is strict") {
  SUBCASE("unknown top-level field") {
    std::string text = kMinimalScenario;
    text.insert(text.rfind('}'), ", \"extra\": 1\n");
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("unknown field 'extra'"),
                         InputError);
  }
  SUBCASE("unknown nested field") {
    std::string text = kMinimalScenario;
    text.replace(text.find("\"seed\": 7"), 9, "\"seed\": 7, \"shape\": 1");
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("graph"), InputError);
  }
  SUBCASE("missing required field") {
    std::string text = kMinimalScenario;
    text.replace(text.find("\"start\""), 7, "\"begin\"");
    CHECK_THROWS_AS(parse_scenario(text), InputError);
  }
  SUBCASE("malformed JSON reports the line") {
    CHECK_THROWS_WITH_AS(parse_scenario("{\n  \"version\": 1,\n  oops\n}"),
                         doctest::Contains("line"), InputError);
  }
}

TEST_CASE("scenario semantic errors name the field") {
  SUBCASE("start inside an obstacle") {
    std::string text = kMinimalScenario;
    text.replace(text.find("[0.1, 0.1]"), 10, "[0.5, 0.5]");
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("start"), InputError);
  }
  SUBCASE("goal inside an obstacle") {
    std::string text = kMinimalScenario;
    text.replace(text.find("[0.9, 0.9]"), 10, "[0.5, 0.5]");
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("goal"), InputError);
  }
  SUBCASE("dimension mismatch") {
    std::string text = kMinimalScenario;
    text.replace(text.find("[0.1, 0.1]"), 10, "[0.1, 0.1, 0.1]");
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("start"), InputError);
  }
  SUBCASE("sampling without bounds") {
    std::string text = kMinimalScenario;
    const auto pos = text.find("  \"bounds\": {\"min\": [0, 0], \"max\": [1, 1]},\n");
    text.erase(pos, std::string("  \"bounds\": {\"min\": [0, 0], \"max\": [1, 1]},\n").size());
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("bounds"), InputError);
  }
}

TEST_CASE("scenario digest tracks content") {
  ScenarioFile a = parse_scenario(kMinimalScenario);
  ScenarioFile b = a;
  CHECK(scenario_digest(a) == scenario_digest(b));
  b.graph.seed = 8;
  CHECK(scenario_digest(a) != scenario_digest(b));
  CHECK(scenario_digest(a).rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("result files embed the digest") {
  const ScenarioFile scenario = parse_scenario(kMinimalScenario);
  SearchResult result;
  result.cost = 1.5;
  result.path = PolylinePath({make_state({0.1, 0.1}), make_state({0.9, 0.9})});
  result.stats = {3, 4, 5, 0.25};
  const std::string text = result_json(scenario, {{SearchMode::Informed, result}});
  CHECK(result_file_digest(text) == scenario_digest(scenario));
  CHECK(text.find("\"informed\"") != std::string::npos);
  CHECK(text.find("\"tool_version\"") != std::string::npos);
  CHECK(text.find("\"wall_seconds\"") != std::string::npos);

  SearchResult missing;  // no path found
  const std::string unfound =
      result_json(scenario, {{SearchMode::Uninformed, missing}});
  CHECK(unfound.find("\"found\": false") != std::string::npos);
  CHECK_THROWS_AS(result_file_digest("{}"), InputError);
}

TEST_CASE("numeric formatting keeps 12 significant digits") {
  CHECK(format_significant(std::log(2.0)) == "0.693147180560");
  CHECK(format_significant(std::log(3.0)) == "1.09861228867");
  CHECK(format_significant(1.0) == "1.00000000000");
  CHECK(format_significant(2.0 * std::log(2.0)) == "1.38629436112");
}

TEST_CASE("golden scenario corpus re-serializes byte-identically") {
  const std::filesystem::path dir = std::filesystem::path(CLEARBOUND_SOURCE_DIR) / "scenarios";
  REQUIRE(std::filesystem::is_directory(dir));
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    const std::string text = slurp(entry.path());
    const ScenarioFile scenario = load_scenario(entry.path());
    CHECK_MESSAGE(canonical_scenario_json(scenario) == text, entry.path().string());
  }
  CHECK(count >= 10);
}

TEST_CASE("svg rendering") {
  SUBCASE("empty world with a straight path has exactly one path element") {
    World world(2, {});
    const PolylinePath path({make_state({0.0, 0.0}), make_state({1.0, 1.0})});
    const std::string svg = render_svg(world, nullptr, &path);
    CHECK(count_occurrences(svg, "<path") == 1);
    CHECK(count_occurrences(svg, "<circle") == 0);
    CHECK(count_occurrences(svg, "<polygon") == 0);
  }
  SUBCASE("disc obstacle appears with the mapped center and radius") {
    World world(2, {Hypersphere{make_state({0.5, 0.5}), 0.2}},
                AxisAlignedBox{make_state({0.0, 0.0}), make_state({1.0, 1.0})});
    const std::string svg = render_svg(world, nullptr, nullptr);
    // Extent is the bounds padded by 5%: [-0.05, 1.05]^2 onto an 800px canvas.
    const double scale = 800.0 / 1.1;
    CHECK(attribute_value(svg, "cx") == doctest::Approx(0.55 * scale).epsilon(1e-6));
    CHECK(attribute_value(svg, "cy") == doctest::Approx(0.55 * scale).epsilon(1e-6));
    CHECK(attribute_value(svg, "r") == doctest::Approx(0.2 * scale).epsilon(1e-6));
  }
  SUBCASE("half-space renders as a clipped polygon") {
    World world(2, {HalfSpace{make_state({1.0, 0.0}), 0.3}},
                AxisAlignedBox{make_state({0.0, 0.0}), make_state({1.0, 1.0})});
    const std::string svg = render_svg(world, nullptr, nullptr);
    CHECK(count_occurrences(svg, "<polygon") == 1);
  }
  SUBCASE("deterministic output") {
    World world(2, {Hypersphere{make_state({0.4, 0.6}), 0.15}},
                AxisAlignedBox{make_state({0.0, 0.0}), make_state({1.0, 1.0})});
    const auto graph = build_graph(world, make_state({0.1, 0.1}), make_state({0.9, 0.9}),
                                   {60, 0.3, 3});
    const auto result = search(graph, world, SearchMode::InformedLazy);
    REQUIRE(result.path.has_value());
    const std::string a = render_svg(world, &graph, &*result.path);
    const std::string b = render_svg(world, &graph, &*result.path);
    CHECK(a == b);
    CHECK(count_occurrences(a, "<path") == 1);
    CHECK(count_occurrences(a, "<line") >= 1);
  }
  SUBCASE("non-2D worlds are refused") {
    World world(3, {});
    CHECK_THROWS_AS(render_svg(world, nullptr, nullptr), RenderError);
  }
  SUBCASE("clearance discs are drawn on request") {
    World world(2, {Hypersphere{make_state({0.5, 0.5}), 0.2}},
                AxisAlignedBox{make_state({0.0, 0.0}), make_state({1.0, 1.0})});
    const PolylinePath path({make_state({0.1, 0.1}), make_state({0.9, 0.1})});
    RenderOptions options;
    options.draw_clearance_discs = true;
    const std::string svg = render_svg(world, nullptr, &path, options);
    // Obstacle disc plus one disc per waypoint.
    CHECK(count_occurrences(svg, "<circle") == 3);
  }
}
