#pragma once

#include <vector>

#include "clearbound/geometry.hpp"

namespace clearbound {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_depth = 50;
};

void validate_quadrature_config(const QuadratureConfig& cfg);

// Ordered waypoint list parameterized by arc length. Consecutive duplicate
// waypoints are rejected so every segment has positive length.
class PolylinePath {
 public:
  explicit PolylinePath(std::vector<State> waypoints);

  int dimension() const noexcept { return static_cast<int>(waypoints_.front().size()); }
  double length() const noexcept { return cumulative_.back(); }
  const std::vector<State>& waypoints() const noexcept { return waypoints_; }

  // cumulative_lengths()[i] is the arc length at waypoint i; front() == 0,
  // back() == length().
  const std::vector<double>& cumulative_lengths() const noexcept { return cumulative_; }

  // Point at arc-length parameter t via linear interpolation. t may stray
  // outside [0, length()] by 1e-12 * max(1, length()); beyond that it is an
  // input error.
  State state_at(double t) const;

  PolylinePath reversed() const;

 private:
  std::vector<State> waypoints_;
  std::vector<double> cumulative_;
};

// Reciprocal clearance cost of the path: the integral over arc length of
// 1/clearance. Evaluated per polyline segment with adaptive Simpson
// quadrature (interval halving, Richardson error estimate). Returns
// +infinity when the path meets the invalid set; 0 when the world has no
// invalid set. Throws InputError for invalid waypoints and ConvergenceError
// when max_depth is exhausted before the tolerances are met.
double reciprocal_cost(const PolylinePath& path, const World& world,
                       const QuadratureConfig& cfg = {});

}  // namespace clearbound
