#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clearbound/cost_oracle.hpp"
#include "clearbound/geometry.hpp"
#include "clearbound/heuristics.hpp"
#include "clearbound/planner.hpp"
#include "clearbound/scenario_io.hpp"
#include "clearbound/svg_render.hpp"
#include "clearbound/version.hpp"

namespace py = pybind11;
using namespace clearbound;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reciprocal-clearance cost heuristics and informed planning";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<RenderError>(m, "RenderError", PyExc_RuntimeError);

  py::class_<Hypersphere>(m, "Hypersphere")
      .def(py::init<State, double>(), py::arg("center"), py::arg("radius"))
      .def_readonly("center", &Hypersphere::center)
      .def_readonly("radius", &Hypersphere::radius);

  py::class_<AxisAlignedBox>(m, "AxisAlignedBox")
      .def(py::init<State, State>(), py::arg("min_corner"), py::arg("max_corner"))
      .def_readonly("min_corner", &AxisAlignedBox::min_corner)
      .def_readonly("max_corner", &AxisAlignedBox::max_corner);

  py::class_<HalfSpace>(m, "HalfSpace")
      .def(py::init<State, double>(), py::arg("normal"), py::arg("offset"))
      .def_readonly("normal", &HalfSpace::normal)
      .def_readonly("offset", &HalfSpace::offset);

  py::class_<World>(m, "World")
      .def(py::init<int, std::vector<Obstacle>, std::optional<AxisAlignedBox>, bool>(),
           py::arg("dimension"), py::arg("obstacles") = std::vector<Obstacle>{},
           py::arg("bounds") = std::nullopt, py::arg("bounds_are_obstacles") = false)
      .def_property_readonly("dimension", &World::dimension)
      .def("clearance", &World::clearance, py::arg("x"))
      .def("is_valid", &World::is_valid, py::arg("x"))
      .def("segment_hits_invalid", &World::segment_hits_invalid, py::arg("a"), py::arg("b"));

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init([](double rel_tol, double abs_tol, int max_depth) {
             QuadratureConfig cfg{rel_tol, abs_tol, max_depth};
             validate_quadrature_config(cfg);
             return cfg;
           }),
           py::arg("rel_tol") = 1e-9, py::arg("abs_tol") = 1e-12, py::arg("max_depth") = 50)
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
      .def_readwrite("max_depth", &QuadratureConfig::max_depth);

  py::class_<PolylinePath>(m, "PolylinePath")
      .def(py::init<std::vector<State>>(), py::arg("waypoints"))
      .def_property_readonly("length", &PolylinePath::length)
      .def_property_readonly("dimension", &PolylinePath::dimension)
      .def_property_readonly("waypoints", &PolylinePath::waypoints)
      .def("state_at", &PolylinePath::state_at, py::arg("t"))
      .def("reversed", &PolylinePath::reversed);

  m.def("reciprocal_cost", &reciprocal_cost, py::arg("path"), py::arg("world"),
        py::arg("cfg") = QuadratureConfig{},
        "True reciprocal-clearance cost of a polyline path (adaptive quadrature).");

  py::enum_<BoundKind>(m, "BoundKind")
      .value("OneEndpoint", BoundKind::OneEndpoint)
      .value("TwoEndpoint", BoundKind::TwoEndpoint)
      .value("SingleSample", BoundKind::SingleSample)
      .value("MultiSample", BoundKind::MultiSample)
      .value("EndpointChain", BoundKind::EndpointChain);

  py::class_<CostBound>(m, "CostBound")
      .def_readonly("value", &CostBound::value)
      .def_readonly("kind", &CostBound::kind)
      .def("__float__", [](const CostBound& b) { return b.value; })
      .def("__repr__", [](const CostBound& b) {
        return "CostBound(value=" + std::to_string(b.value) + ", kind=" +
               to_string(b.kind) + ")";
      });

  py::class_<ClearanceSample>(m, "ClearanceSample")
      .def(py::init<double, double>(), py::arg("t"), py::arg("d"))
      .def_readwrite("t", &ClearanceSample::t)
      .def_readwrite("d", &ClearanceSample::d);

  py::enum_<SampleCheck>(m, "SampleCheck")
      .value("Permissive", SampleCheck::Permissive)
      .value("Strict", SampleCheck::Strict);

  m.def("clearance_cone", &clearance_cone, py::arg("d1"), py::arg("t1"), py::arg("t"));
  m.def("bound_one_endpoint", &bound_one_endpoint, py::arg("d1"), py::arg("lhat"));
  m.def("bound_two_endpoint", &bound_two_endpoint, py::arg("d1"), py::arg("d2"),
        py::arg("lhat"));
  m.def("bound_single_sample", &bound_single_sample, py::arg("d1"), py::arg("t1"), py::arg("l"));
  m.def(
      "bound_multi_sample",
      [](const std::vector<ClearanceSample>& samples, double l, SampleCheck check) {
        return bound_multi_sample(samples, l, check);
      },
      py::arg("samples"), py::arg("l"), py::arg("check") = SampleCheck::Permissive);
  m.def(
      "bound_endpoint_chain",
      [](const std::vector<ClearanceSample>& samples, double l, SampleCheck check) {
        return bound_endpoint_chain(samples, l, check);
      },
      py::arg("samples"), py::arg("l"), py::arg("check") = SampleCheck::Permissive);

  py::class_<GraphParams>(m, "GraphParams")
      .def(py::init([](int n_vertices, double radius, std::uint64_t seed) {
             return GraphParams{n_vertices, radius, seed};
           }),
           py::arg("n_vertices"), py::arg("radius"), py::arg("seed") = 0)
      .def_readwrite("n_vertices", &GraphParams::n_vertices)
      .def_readwrite("radius", &GraphParams::radius)
      .def_readwrite("seed", &GraphParams::seed);

  py::class_<GeometricGraph>(m, "GeometricGraph")
      .def_readonly("vertices", &GeometricGraph::vertices)
      .def_readonly("clearances", &GeometricGraph::clearances)
      .def_readonly("adjacency", &GeometricGraph::adjacency)
      .def_readonly("start_index", &GeometricGraph::start_index)
      .def_readonly("goal_index", &GeometricGraph::goal_index)
      .def("edge_count", &GeometricGraph::edge_count)
      .def("describe", &describe_graph);

  m.def("build_graph", &build_graph, py::arg("world"), py::arg("start"), py::arg("goal"),
        py::arg("params"));
  m.def("halton", &halton, py::arg("index"), py::arg("base"));

  py::enum_<SearchMode>(m, "SearchMode")
      .value("Uninformed", SearchMode::Uninformed)
      .value("Informed", SearchMode::Informed)
      .value("InformedLazy", SearchMode::InformedLazy);

  py::class_<SearchStats>(m, "SearchStats")
      .def_readonly("vertex_expansions", &SearchStats::vertex_expansions)
      .def_readonly("exact_edge_evals", &SearchStats::exact_edge_evals)
      .def_readonly("heuristic_evals", &SearchStats::heuristic_evals)
      .def_readonly("wall_seconds", &SearchStats::wall_seconds);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](QuadratureConfig quadrature, int k_interior) {
             return SearchConfig{quadrature, k_interior};
           }),
           py::arg("quadrature") = QuadratureConfig{}, py::arg("k_interior") = 0)
      .def_readwrite("quadrature", &SearchConfig::quadrature)
      .def_readwrite("k_interior", &SearchConfig::k_interior);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("path", &SearchResult::path)
      .def_readonly("cost", &SearchResult::cost)
      .def_readonly("stats", &SearchResult::stats);

  m.def("cost_to_go", &cost_to_go, py::arg("graph"), py::arg("v"));
  m.def("edge_cost_exact", &edge_cost_exact, py::arg("world"), py::arg("a"), py::arg("b"),
        py::arg("cfg") = QuadratureConfig{});
  m.def("edge_cost_heuristic", &edge_cost_heuristic, py::arg("world"), py::arg("graph"),
        py::arg("a"), py::arg("b"), py::arg("k_interior"));
  m.def("search", &search, py::arg("graph"), py::arg("world"), py::arg("mode"),
        py::arg("cfg") = SearchConfig{});

  py::class_<HeuristicConfig>(m, "HeuristicConfig")
      .def_readwrite("mode", &HeuristicConfig::mode)
      .def_readwrite("k_interior", &HeuristicConfig::k_interior);

  py::class_<ScenarioFile>(m, "ScenarioFile")
      .def_readonly("version", &ScenarioFile::version)
      .def_readonly("dimension", &ScenarioFile::dimension)
      .def_readonly("bounds", &ScenarioFile::bounds)
      .def_readonly("bounds_are_obstacles", &ScenarioFile::bounds_are_obstacles)
      .def_readonly("obstacles", &ScenarioFile::obstacles)
      .def_readonly("start", &ScenarioFile::start)
      .def_readonly("goal", &ScenarioFile::goal)
      .def_readonly("graph", &ScenarioFile::graph)
      .def_readonly("quadrature", &ScenarioFile::quadrature)
      .def_readonly("heuristic", &ScenarioFile::heuristic)
      .def("world", &ScenarioFile::world);

  m.def("parse_scenario", &parse_scenario, py::arg("text"), py::arg("origin") = "<string>");
  m.def("load_scenario",
        [](const std::string& path) { return load_scenario(std::filesystem::path(path)); },
        py::arg("path"));
  m.def("canonical_scenario_json", &canonical_scenario_json, py::arg("scenario"));
  m.def("scenario_digest", &scenario_digest, py::arg("scenario"));
  m.def("format_significant", &format_significant, py::arg("value"), py::arg("digits") = 12);

  m.def(
      "render_svg",
      [](const World& world, const GeometricGraph* graph, const PolylinePath* path,
         bool draw_graph, bool draw_clearance_discs) {
        RenderOptions options;
        options.draw_graph = draw_graph;
        options.draw_clearance_discs = draw_clearance_discs;
        return render_svg(world, graph, path, options);
      },
      py::arg("world"), py::arg("graph") = nullptr, py::arg("path") = nullptr,
      py::arg("draw_graph") = true, py::arg("draw_clearance_discs") = false);
}
