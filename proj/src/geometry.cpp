#include "clearbound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace clearbound {

namespace {

struct DimensionVisitor {
  int operator()(const Hypersphere& s) const { return static_cast<int>(s.center.size()); }
  int operator()(const AxisAlignedBox& b) const { return static_cast<int>(b.min_corner.size()); }
  int operator()(const HalfSpace& h) const { return static_cast<int>(h.normal.size()); }
};

// Distance from x to the box's closed invalid set (0 inside the box).
double box_distance(const AxisAlignedBox& box, const State& x) {
  double sq = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double below = box.min_corner[i] - x[i];
    const double above = x[i] - box.max_corner[i];
    const double d = std::max({below, above, 0.0});
    sq += d * d;
  }
  return std::sqrt(sq);
}

// Distance from x to the complement of the box: 0 outside, distance to the
// nearest face from inside.
double box_complement_distance(const AxisAlignedBox& box, const State& x) {
  double d = kInf;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    d = std::min({d, x[i] - box.min_corner[i], box.max_corner[i] - x[i]});
  }
  return std::max(d, 0.0);
}

// Squared distance from point p to the closed segment [a, b].
double segment_point_sq_distance(const State& a, const State& b, const State& p) {
  const State ab = b - a;
  const double len_sq = ab.squaredNorm();
  if (len_sq == 0.0) return (p - a).squaredNorm();
  const double s = std::clamp((p - a).dot(ab) / len_sq, 0.0, 1.0);
  return (p - (a + s * ab)).squaredNorm();
}

// Slab test: does the segment [a, b] meet the closed box?
bool segment_intersects_box(const AxisAlignedBox& box, const State& a, const State& b) {
  double lo = 0.0;
  double hi = 1.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double d = b[i] - a[i];
    if (d == 0.0) {
      if (a[i] < box.min_corner[i] || a[i] > box.max_corner[i]) return false;
      continue;
    }
    double t0 = (box.min_corner[i] - a[i]) / d;
    double t1 = (box.max_corner[i] - a[i]) / d;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    if (lo > hi) return false;
  }
  return true;
}

bool inside_box(const AxisAlignedBox& box, const State& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] < box.min_corner[i] || x[i] > box.max_corner[i]) return false;
  }
  return true;
}

void validate_box(const AxisAlignedBox& box, const char* name) {
  require_finite(box.min_corner, name);
  require_finite(box.max_corner, name);
  if (box.min_corner.size() != box.max_corner.size()) {
    throw InputError(std::string(name) + ": corner dimensions differ");
  }
  for (Eigen::Index i = 0; i < box.min_corner.size(); ++i) {
    if (!(box.min_corner[i] < box.max_corner[i])) {
      throw InputError(std::string(name) + ": min_corner must be strictly below max_corner");
    }
  }
}

}  // namespace

void require_finite(const State& x, const char* name) {
  if (!x.allFinite()) {
    throw InputError(std::string(name) + ": coordinates must be finite");
  }
}

int obstacle_dimension(const Obstacle& obstacle) {
  return std::visit(DimensionVisitor{}, obstacle);
}

void validate_obstacle(const Obstacle& obstacle) {
  if (obstacle_dimension(obstacle) < 1) {
    throw InputError("obstacle: dimension must be at least 1");
  }
  if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
    require_finite(sphere->center, "hypersphere.center");
    if (!(sphere->radius > 0.0) || !std::isfinite(sphere->radius)) {
      throw InputError("hypersphere.radius must be positive and finite");
    }
  } else if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
    validate_box(*box, "box");
  } else {
    const auto& half = std::get<HalfSpace>(obstacle);
    require_finite(half.normal, "half_space.normal");
    if (!std::isfinite(half.offset)) {
      throw InputError("half_space.offset must be finite");
    }
    if (std::abs(half.normal.norm() - 1.0) > 1e-12) {
      throw InputError("half_space.normal must be unit length (within 1e-12)");
    }
  }
}

double obstacle_distance(const Obstacle& obstacle, const State& x) {
  if (obstacle_dimension(obstacle) != x.size()) {
    throw InputError("obstacle_distance: dimension mismatch");
  }
  if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
    return std::max((x - sphere->center).norm() - sphere->radius, 0.0);
  }
  if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
    return box_distance(*box, x);
  }
  const auto& half = std::get<HalfSpace>(obstacle);
  return std::max(half.normal.dot(x) - half.offset, 0.0);
}

bool obstacle_intersects_segment(const Obstacle& obstacle, const State& a, const State& b) {
  if (obstacle_dimension(obstacle) != a.size() || a.size() != b.size()) {
    throw InputError("obstacle_intersects_segment: dimension mismatch");
  }
  if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
    return segment_point_sq_distance(a, b, sphere->center) <= sphere->radius * sphere->radius;
  }
  if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
    return segment_intersects_box(*box, a, b);
  }
  const auto& half = std::get<HalfSpace>(obstacle);
  return std::min(half.normal.dot(a), half.normal.dot(b)) <= half.offset;
}

World::World(int dimension, std::vector<Obstacle> obstacles,
             std::optional<AxisAlignedBox> bounds, bool bounds_are_obstacles)
    : dimension_(dimension),
      obstacles_(std::move(obstacles)),
      bounds_(std::move(bounds)),
      bounds_are_obstacles_(bounds_are_obstacles) {
  if (dimension_ < 1) {
    throw InputError("world: dimension must be at least 1");
  }
  for (std::size_t i = 0; i < obstacles_.size(); ++i) {
    validate_obstacle(obstacles_[i]);
    if (obstacle_dimension(obstacles_[i]) != dimension_) {
      std::ostringstream msg;
      msg << "world: obstacle " << i << " has dimension " << obstacle_dimension(obstacles_[i])
          << ", expected " << dimension_;
      throw InputError(msg.str());
    }
  }
  if (bounds_) {
    validate_box(*bounds_, "bounds");
    if (bounds_->min_corner.size() != dimension_) {
      throw InputError("world: bounds dimension does not match world dimension");
    }
  }
  if (bounds_are_obstacles_ && !bounds_) {
    throw InputError("world: bounds_are_obstacles requires bounds");
  }
}

void World::check_dimension(const State& x) const {
  if (x.size() != dimension_) {
    std::ostringstream msg;
    msg << "world: state has dimension " << x.size() << ", expected " << dimension_;
    throw InputError(msg.str());
  }
}

double World::clearance(const State& x) const {
  check_dimension(x);
  double d = kInf;
  for (const auto& obstacle : obstacles_) {
    d = std::min(d, obstacle_distance(obstacle, x));
    if (d == 0.0) return 0.0;
  }
  if (bounds_are_obstacles_) {
    d = std::min(d, box_complement_distance(*bounds_, x));
  }
  return d;
}

bool World::segment_hits_invalid(const State& a, const State& b) const {
  check_dimension(a);
  check_dimension(b);
  for (const auto& obstacle : obstacles_) {
    if (obstacle_intersects_segment(obstacle, a, b)) return true;
  }
  if (bounds_are_obstacles_) {
    // Both endpoints inside keeps the whole segment inside (box is convex).
    if (!inside_box(*bounds_, a) || !inside_box(*bounds_, b)) return true;
  }
  return false;
}

}  // namespace clearbound
