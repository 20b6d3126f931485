#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "clearbound/errors.hpp"

namespace clearbound {

// A state is a point in d-dimensional Euclidean space.
using State = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Hypersphere {
  State center;
  double radius = 0.0;
};

struct AxisAlignedBox {
  State min_corner;
  State max_corner;
};

// Invalid side is {x : normal . x <= offset}; normal must be unit length.
struct HalfSpace {
  State normal;
  double offset = 0.0;
};

using Obstacle = std::variant<Hypersphere, AxisAlignedBox, HalfSpace>;

int obstacle_dimension(const Obstacle& obstacle);

// Throws InputError when the obstacle parameters are malformed.
void validate_obstacle(const Obstacle& obstacle);

// Euclidean distance from x to the obstacle's closed invalid set; 0 inside.
double obstacle_distance(const Obstacle& obstacle, const State& x);

// Does the closed segment [a, b] meet the obstacle's invalid set?
bool obstacle_intersects_segment(const Obstacle& obstacle, const State& a, const State& b);

void require_finite(const State& x, const char* name);

// Immutable collection of obstacles with an optional bounding box. The
// invalid set is the union of the obstacles, plus the complement of the
// bounding box when bounds_are_obstacles is set.
class World {
 public:
  World(int dimension, std::vector<Obstacle> obstacles,
        std::optional<AxisAlignedBox> bounds = std::nullopt,
        bool bounds_are_obstacles = false);

  int dimension() const noexcept { return dimension_; }
  const std::vector<Obstacle>& obstacles() const noexcept { return obstacles_; }
  const std::optional<AxisAlignedBox>& bounds() const noexcept { return bounds_; }
  bool bounds_are_obstacles() const noexcept { return bounds_are_obstacles_; }

  // Minimum distance from x to the invalid set; +infinity when the invalid
  // set is empty; 0 for invalid states (the invalid set is closed).
  double clearance(const State& x) const;

  bool is_valid(const State& x) const { return clearance(x) > 0.0; }

  // True when some state of the closed segment [a, b] is invalid. Exact
  // (closed-form per obstacle), not sampled.
  bool segment_hits_invalid(const State& a, const State& b) const;

 private:
  void check_dimension(const State& x) const;

  int dimension_;
  std::vector<Obstacle> obstacles_;
  std::optional<AxisAlignedBox> bounds_;
  bool bounds_are_obstacles_;
};

}  // namespace clearbound
