"""Admissible reciprocal-clearance cost heuristics and informed planning."""

from ._core import (
    AxisAlignedBox,
    BoundKind,
    ClearanceSample,
    ConvergenceError,
    CostBound,
    GeometricGraph,
    GraphParams,
    HalfSpace,
    HeuristicConfig,
    Hypersphere,
    InputError,
    PolylinePath,
    QuadratureConfig,
    RenderError,
    SampleCheck,
    ScenarioFile,
    SearchConfig,
    SearchMode,
    SearchResult,
    SearchStats,
    World,
    __version__,
    bound_endpoint_chain,
    bound_multi_sample,
    bound_one_endpoint,
    bound_single_sample,
    bound_two_endpoint,
    build_graph,
    canonical_scenario_json,
    clearance_cone,
    cost_to_go,
    edge_cost_exact,
    edge_cost_heuristic,
    format_significant,
    halton,
    load_scenario,
    parse_scenario,
    reciprocal_cost,
    render_svg,
    scenario_digest,
    search,
)

__all__ = [
    "AxisAlignedBox",
    "BoundKind",
    "ClearanceSample",
    "ConvergenceError",
    "CostBound",
    "GeometricGraph",
    "GraphParams",
    "HalfSpace",
    "HeuristicConfig",
    "Hypersphere",
    "InputError",
    "PolylinePath",
    "QuadratureConfig",
    "RenderError",
    "SampleCheck",
    "ScenarioFile",
    "SearchConfig",
    "SearchMode",
    "SearchResult",
    "SearchStats",
    "World",
    "__version__",
    "bound_endpoint_chain",
    "bound_multi_sample",
    "bound_one_endpoint",
    "bound_single_sample",
    "bound_two_endpoint",
    "build_graph",
    "canonical_scenario_json",
    "clearance_cone",
    "cost_to_go",
    "edge_cost_exact",
    "edge_cost_heuristic",
    "format_significant",
    "halton",
    "load_scenario",
    "parse_scenario",
    "reciprocal_cost",
    "render_svg",
    "scenario_digest",
    "search",
]
