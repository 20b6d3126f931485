#pragma once

// Randomized worlds, clearance-certified paths, and the brute-force cost
// oracle shared by the unit and acceptance suites. Everything here is
// deterministic for a fixed seed and independent of the adaptive quadrature
// path it is used to check.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "clearbound/cost_oracle.hpp"
#include "clearbound/geometry.hpp"

namespace clearbound::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline State random_unit_vector(Rng& rng, int dim) {
  State v(dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double norm = 0.0;
  while (norm < 1e-6) {
    for (int i = 0; i < dim; ++i) v[i] = gauss(rng.engine());
    norm = v.norm();
  }
  v /= v.norm();
  // Renormalize once more so the unit-norm invariant holds to 1e-12.
  return v / v.norm();
}

// Obstacles scattered in and around the unit cube. Half-spaces are kept
// rarer and shallow so that free space survives.
inline World random_world(Rng& rng, int dim, int max_obstacles) {
  const int count = rng.uniform_int(0, max_obstacles);
  std::vector<Obstacle> obstacles;
  obstacles.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int kind = rng.uniform_int(0, 9);
    if (kind < 5) {
      State center(dim);
      for (int j = 0; j < dim; ++j) center[j] = rng.uniform(-0.2, 1.2);
      obstacles.push_back(Hypersphere{center, rng.uniform(0.05, 0.3)});
    } else if (kind < 8) {
      State lo(dim), hi(dim);
      for (int j = 0; j < dim; ++j) {
        lo[j] = rng.uniform(-0.2, 0.9);
        hi[j] = lo[j] + rng.uniform(0.05, 0.35);
      }
      obstacles.push_back(AxisAlignedBox{lo, hi});
    } else {
      const State normal = random_unit_vector(rng, dim);
      State anchor(dim);
      for (int j = 0; j < dim; ++j) anchor[j] = rng.uniform(-0.1, 1.1);
      obstacles.push_back(HalfSpace{normal, normal.dot(anchor) - rng.uniform(0.3, 1.0)});
    }
  }
  return World(dim, std::move(obstacles));
}

// Minimum sampled clearance along the path minus half the sampling step:
// clearance is 1-Lipschitz in arc length, so this is a true lower bound on
// the exact minimum.
inline double certified_min_clearance(const PolylinePath& path, const World& world,
                                      double step) {
  double certified = kInf;
  const auto& waypoints = path.waypoints();
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const State& a = waypoints[i];
    const State& b = waypoints[i + 1];
    const double len = (b - a).norm();
    const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
    const double h = len / n;
    double lowest = std::min(world.clearance(a), world.clearance(b));
    for (int k = 1; k < n; ++k) {
      lowest = std::min(lowest, world.clearance(a + (static_cast<double>(k) / n) * (b - a)));
      if (lowest - h / 2.0 <= 0.0) return 0.0;
    }
    certified = std::min(certified, lowest - h / 2.0);
  }
  return std::max(certified, 0.0);
}

inline std::optional<State> random_valid_state(Rng& rng, const World& world, int attempts = 64) {
  for (int i = 0; i < attempts; ++i) {
    State x(world.dimension());
    for (int j = 0; j < world.dimension(); ++j) x[j] = rng.uniform(0.0, 1.0);
    if (world.clearance(x) > 1e-3) return x;
  }
  return std::nullopt;
}

inline std::optional<PolylinePath> random_clear_path(Rng& rng, const World& world,
                                                     int max_waypoints, double min_clearance,
                                                     int attempts = 32) {
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const int count = rng.uniform_int(2, max_waypoints);
    std::vector<State> waypoints;
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
      auto x = random_valid_state(rng, world);
      if (!x) {
        ok = false;
        break;
      }
      if (!waypoints.empty() && (*x - waypoints.back()).norm() < 1e-6) {
        --i;  // effectively a retry of this waypoint
        continue;
      }
      waypoints.push_back(std::move(*x));
    }
    if (!ok || waypoints.size() < 2) continue;
    PolylinePath path(waypoints);
    const double step = std::max(2.0 * min_clearance, path.length() / 4096.0);
    if (certified_min_clearance(path, world, step) >= min_clearance) return path;
  }
  return std::nullopt;
}

struct ScenarioPair {
  World world;
  PolylinePath path;
};

// Keeps drawing (world, path) pairs until the path is certified to keep the
// requested clearance, so the reciprocal cost is finite and well-conditioned.
inline ScenarioPair random_scenario_pair(Rng& rng, int dim, int max_obstacles,
                                         int max_waypoints, double min_clearance) {
  for (;;) {
    World world = random_world(rng, dim, max_obstacles);
    if (auto path = random_clear_path(rng, world, max_waypoints, min_clearance)) {
      return {std::move(world), std::move(*path)};
    }
  }
}

// Composite midpoint rule with samples split across segments by length.
// Deliberately independent of the adaptive Simpson implementation.
inline double midpoint_cost(const PolylinePath& path, const World& world, long total_samples) {
  const double total_len = path.length();
  const auto& waypoints = path.waypoints();
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const State& a = waypoints[i];
    const State& b = waypoints[i + 1];
    const double len = (b - a).norm();
    const long n = std::max<long>(1, std::lround(static_cast<double>(total_samples) *
                                                 (len / total_len)));
    const double h = len / static_cast<double>(n);
    double sum = 0.0;
    for (long k = 0; k < n; ++k) {
      const double frac = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      const double d = world.clearance(a + frac * (b - a));
      if (d == 0.0) return kInf;
      sum += 1.0 / d;
    }
    cost += h * sum;
  }
  return cost;
}

inline bool admissible(double bound, double cost, double tol = 1e-9) {
  if (std::isinf(cost)) return true;
  return bound <= cost + tol * (1.0 + std::abs(cost));
}

}  // namespace clearbound::testing
