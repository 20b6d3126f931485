#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clearbound/cost_oracle.hpp"
#include "clearbound/heuristics.hpp"

namespace clearbound {

struct GraphParams {
  int n_vertices = 0;
  double radius = 0.0;
  std::uint64_t seed = 0;  // offset into the Halton sequence
};

// Sampled r-disc graph over the valid states of a world. Immutable after
// build; safe to share across concurrent searches.
struct GeometricGraph {
  std::vector<State> vertices;  // start and goal first, then samples
  std::vector<double> clearances;
  std::vector<std::vector<std::pair<int, double>>> adjacency;  // (neighbor, Euclidean length)
  int start_index = 0;
  int goal_index = 0;
  GraphParams params;

  std::size_t edge_count() const;  // undirected
};

// Element i of the Halton sequence for the given base, in (0, 1).
double halton(std::uint64_t index, std::uint64_t base);

// Deterministic roadmap: start, goal, then params.n_vertices Halton points
// inside the world bounds filtered to valid states; r-disc edges with exact
// Euclidean lengths; per-vertex clearance cached.
GeometricGraph build_graph(const World& world, const State& start, const State& goal,
                           const GraphParams& params);

// Plain-text dump of the full graph, stable across runs for fixed inputs.
std::string describe_graph(const GeometricGraph& graph);

enum class SearchMode { Uninformed, Informed, InformedLazy };

const char* to_string(SearchMode mode) noexcept;
SearchMode parse_search_mode(const std::string& name);

struct SearchStats {
  std::int64_t vertex_expansions = 0;
  std::int64_t exact_edge_evals = 0;
  std::int64_t heuristic_evals = 0;
  double wall_seconds = 0.0;
};

struct SearchConfig {
  QuadratureConfig quadrature{};
  int k_interior = 0;  // interior clearance probes per lazy edge bound
};

struct SearchResult {
  std::optional<PolylinePath> path;  // nullopt when no path exists or start == goal
  double cost = kInf;                // 0 when start == goal
  SearchStats stats;
};

// Admissible cost-to-go from vertex v to the goal: the two-endpoint bound
// with the Euclidean distance as the arc-length lower bound.
CostBound cost_to_go(const GeometricGraph& graph, int v);

// True reciprocal-clearance cost of the straight segment a -> b.
double edge_cost_exact(const World& world, const State& a, const State& b,
                       const QuadratureConfig& cfg = {});

// Admissible lower bound on the exact edge cost: an endpoint chain over the
// cached endpoint clearances plus k_interior evenly spaced interior probes.
// Returns +infinity when a probe lands on the invalid set.
CostBound edge_cost_heuristic(const World& world, const GeometricGraph& graph, int a, int b,
                              int k_interior);

// Uninformed: Dijkstra with exact edge costs. Informed: A* with exact edge
// costs and cost_to_go, re-expansion permitted. InformedLazy: A* whose queue
// orders edges by their heuristic cost and defers exact integration until an
// edge is popped. All modes return the optimal cost.
SearchResult search(const GeometricGraph& graph, const World& world, SearchMode mode,
                    const SearchConfig& cfg = {});

}  // namespace clearbound
