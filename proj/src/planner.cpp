#include "clearbound/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace clearbound {

std::size_t GeometricGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

double halton(std::uint64_t index, std::uint64_t base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

namespace {

std::vector<std::uint64_t> first_primes(int count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  std::uint64_t candidate = 2;
  while (static_cast<int>(primes.size()) < count) {
    bool is_prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

bool exactly_equal(const State& a, const State& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

GeometricGraph build_graph(const World& world, const State& start, const State& goal,
                           const GraphParams& params) {
  if (params.n_vertices < 0) throw InputError("graph: n_vertices must be non-negative");
  if (!(params.radius > 0.0) || !std::isfinite(params.radius)) {
    throw InputError("graph: radius must be positive and finite");
  }
  require_finite(start, "start");
  require_finite(goal, "goal");
  if (!world.is_valid(start)) throw InputError("start state is invalid in this world");
  if (!world.is_valid(goal)) throw InputError("goal state is invalid in this world");
  if (params.n_vertices > 0 && !world.bounds()) {
    throw InputError("graph: sampling requires world bounds");
  }

  GeometricGraph graph;
  graph.params = params;
  graph.vertices.push_back(start);
  graph.start_index = 0;
  if (exactly_equal(start, goal)) {
    graph.goal_index = 0;
  } else {
    graph.vertices.push_back(goal);
    graph.goal_index = 1;
  }

  if (params.n_vertices > 0) {
    const auto& box = *world.bounds();
    const int dim = world.dimension();
    const auto primes = first_primes(dim);
    for (int i = 0; i < params.n_vertices; ++i) {
      const std::uint64_t index = params.seed + static_cast<std::uint64_t>(i) + 1;
      State x(dim);
      for (int j = 0; j < dim; ++j) {
        const double u = halton(index, primes[j]);
        x[j] = box.min_corner[j] + u * (box.max_corner[j] - box.min_corner[j]);
      }
      if (!world.is_valid(x)) continue;
      bool duplicate = false;
      for (const auto& v : graph.vertices) {
        if (exactly_equal(v, x)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) graph.vertices.push_back(std::move(x));
    }
  }

  const int n = static_cast<int>(graph.vertices.size());
  graph.clearances.reserve(n);
  for (const auto& v : graph.vertices) graph.clearances.push_back(world.clearance(v));
  graph.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double len = (graph.vertices[i] - graph.vertices[j]).norm();
      if (len <= params.radius) {
        graph.adjacency[i].emplace_back(j, len);
        graph.adjacency[j].emplace_back(i, len);
      }
    }
  }
  return graph;
}

std::string describe_graph(const GeometricGraph& graph) {
  std::ostringstream out;
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  out << "vertices " << graph.vertices.size() << " start " << graph.start_index << " goal "
      << graph.goal_index << "\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    out << i << ":";
    for (Eigen::Index k = 0; k < graph.vertices[i].size(); ++k) {
      out << " ";
      put(graph.vertices[i][k]);
    }
    out << " | ";
    put(graph.clearances[i]);
    out << "\n";
  }
  for (std::size_t i = 0; i < graph.adjacency.size(); ++i) {
    out << i << " ->";
    for (const auto& [j, len] : graph.adjacency[i]) {
      out << " " << j << ":";
      put(len);
    }
    out << "\n";
  }
  return out.str();
}

const char* to_string(SearchMode mode) noexcept {
  switch (mode) {
    case SearchMode::Uninformed: return "uninformed";
    case SearchMode::Informed: return "informed";
    case SearchMode::InformedLazy: return "informed_lazy";
  }
  return "unknown";
}

SearchMode parse_search_mode(const std::string& name) {
  if (name == "uninformed") return SearchMode::Uninformed;
  if (name == "informed") return SearchMode::Informed;
  if (name == "informed_lazy") return SearchMode::InformedLazy;
  throw InputError("unknown search mode: " + name);
}

CostBound cost_to_go(const GeometricGraph& graph, int v) {
  const int goal = graph.goal_index;
  const double dist = (graph.vertices[v] - graph.vertices[goal]).norm();
  return bound_two_endpoint(graph.clearances[v], graph.clearances[goal], dist);
}

double edge_cost_exact(const World& world, const State& a, const State& b,
                       const QuadratureConfig& cfg) {
  return reciprocal_cost(PolylinePath({a, b}), world, cfg);
}

CostBound edge_cost_heuristic(const World& world, const GeometricGraph& graph, int a, int b,
                              int k_interior) {
  if (k_interior < 0) throw InputError("k_interior must be non-negative");
  const State& va = graph.vertices[a];
  const State& vb = graph.vertices[b];
  const double len = (vb - va).norm();
  std::vector<ClearanceSample> samples;
  samples.reserve(static_cast<std::size_t>(k_interior) + 2);
  samples.push_back({0.0, graph.clearances[a]});
  for (int j = 1; j <= k_interior; ++j) {
    const double frac = static_cast<double>(j) / (k_interior + 1);
    const double t = len * frac;
    if (!(t > samples.back().t) || !(t < len)) continue;
    const double d = world.clearance(va + frac * (vb - va));
    if (d == 0.0) return {kInf, BoundKind::EndpointChain};
    samples.push_back({t, d});
  }
  samples.push_back({len, graph.clearances[b]});
  return bound_endpoint_chain(samples, len);
}

namespace {

struct QueueEntry {
  double f = 0.0;
  double g = 0.0;       // g of the entry's anchor vertex at push time
  int target = -1;
  int source = -1;      // -1 for vertex entries
  double edge_cost = 0.0;
  std::uint8_t kind = 0;  // 0 vertex, 1 lazy unevaluated edge, 2 lazy evaluated edge

  friend bool operator>(const QueueEntry& a, const QueueEntry& b) {
    return std::tie(a.f, a.g, a.target, a.source, a.kind) >
           std::tie(b.f, b.g, b.target, b.source, b.kind);
  }
};

using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

std::uint64_t edge_key(int u, int v) {
  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (lo << 32) | hi;
}

class SearchRun {
 public:
  SearchRun(const GeometricGraph& graph, const World& world, const SearchConfig& cfg,
            SearchStats& stats)
      : graph_(graph),
        world_(world),
        cfg_(cfg),
        stats_(stats),
        h_cache_(graph.vertices.size(), std::numeric_limits<double>::quiet_NaN()) {}

  double exact_cost(int u, int v) {
    const auto key = edge_key(u, v);
    if (const auto it = exact_cache_.find(key); it != exact_cache_.end()) return it->second;
    const double c = edge_cost_exact(world_, graph_.vertices[u], graph_.vertices[v],
                                     cfg_.quadrature);
    ++stats_.exact_edge_evals;
    exact_cache_.emplace(key, c);
    return c;
  }

  double heuristic_cost(int u, int v) {
    const auto key = edge_key(u, v);
    if (const auto it = heur_cache_.find(key); it != heur_cache_.end()) return it->second;
    const double c = edge_cost_heuristic(world_, graph_, u, v, cfg_.k_interior).value;
    ++stats_.heuristic_evals;
    heur_cache_.emplace(key, c);
    return c;
  }

  double h(int v) {
    if (std::isnan(h_cache_[v])) {
      h_cache_[v] = cost_to_go(graph_, v).value;
      ++stats_.heuristic_evals;
    }
    return h_cache_[v];
  }

 private:
  const GeometricGraph& graph_;
  const World& world_;
  const SearchConfig& cfg_;
  SearchStats& stats_;
  std::vector<double> h_cache_;
  std::unordered_map<std::uint64_t, double> exact_cache_;
  std::unordered_map<std::uint64_t, double> heur_cache_;
};

}  // namespace

SearchResult search(const GeometricGraph& graph, const World& world, SearchMode mode,
                    const SearchConfig& cfg) {
  validate_quadrature_config(cfg.quadrature);
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult result;
  const int n = static_cast<int>(graph.vertices.size());
  const int start = graph.start_index;
  const int goal = graph.goal_index;

  if (start == goal) {
    result.cost = 0.0;
    result.stats.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  SearchRun run(graph, world, cfg, result.stats);
  std::vector<double> g(n, kInf);
  std::vector<int> parent(n, -1);
  MinQueue queue;
  g[start] = 0.0;

  const bool informed = mode != SearchMode::Uninformed;
  auto vertex_key = [&](int v) { return informed ? g[v] + run.h(v) : g[v]; };

  if (mode == SearchMode::InformedLazy) {
    auto expand = [&](int u) {
      ++result.stats.vertex_expansions;
      for (const auto& [w, len] : graph.adjacency[u]) {
        (void)len;
        const double bound = run.heuristic_cost(u, w);
        if (!std::isfinite(bound)) continue;  // edge provably blocked
        queue.push({g[u] + bound + run.h(w), g[u], w, u, 0.0, 1});
      }
    };
    expand(start);
    while (!queue.empty()) {
      const QueueEntry e = queue.top();
      queue.pop();
      // Every queue key lower-bounds the cost of any solution through that
      // entry, so the incumbent is optimal once it matches the queue minimum.
      if (g[goal] <= e.f) break;
      if (e.g > g[e.source]) continue;  // superseded by a cheaper push
      if (e.kind == 1) {
        const double c = run.exact_cost(e.source, e.target);
        if (!std::isfinite(c)) continue;
        queue.push({g[e.source] + c + run.h(e.target), g[e.source], e.target, e.source, c, 2});
      } else if (g[e.source] + e.edge_cost < g[e.target]) {
        g[e.target] = g[e.source] + e.edge_cost;
        parent[e.target] = e.source;
        if (e.target != goal) expand(e.target);
      }
    }
  } else {
    queue.push({vertex_key(start), 0.0, start, -1, 0.0, 0});
    while (!queue.empty()) {
      const QueueEntry e = queue.top();
      queue.pop();
      const int u = e.target;
      if (e.g > g[u]) continue;  // stale
      if (u == goal) break;
      ++result.stats.vertex_expansions;
      for (const auto& [w, len] : graph.adjacency[u]) {
        (void)len;
        const double c = run.exact_cost(u, w);
        if (!std::isfinite(c)) continue;
        if (g[u] + c < g[w]) {
          g[w] = g[u] + c;
          parent[w] = u;
          queue.push({vertex_key(w), g[w], w, u, 0.0, 0});
        }
      }
    }
  }

  result.cost = g[goal];
  if (std::isfinite(g[goal])) {
    std::vector<State> waypoints;
    for (int v = goal; v != -1; v = parent[v]) waypoints.push_back(graph.vertices[v]);
    std::reverse(waypoints.begin(), waypoints.end());
    result.path = PolylinePath(std::move(waypoints));
  }
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace clearbound
