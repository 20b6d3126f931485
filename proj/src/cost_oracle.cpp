#include "clearbound/cost_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace clearbound {

void validate_quadrature_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
    throw InputError("quadrature: tolerances must be positive");
  }
  if (cfg.max_depth < 1) {
    throw InputError("quadrature: max_depth must be at least 1");
  }
}

PolylinePath::PolylinePath(std::vector<State> waypoints) : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) {
    throw InputError("path: at least 2 waypoints required");
  }
  const Eigen::Index dim = waypoints_.front().size();
  if (dim < 1) {
    throw InputError("path: waypoint dimension must be at least 1");
  }
  cumulative_.reserve(waypoints_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    require_finite(waypoints_[i], "path waypoint");
    if (waypoints_[i].size() != dim) {
      throw InputError("path: all waypoints must share one dimension");
    }
    if (i > 0) {
      const double seg = (waypoints_[i] - waypoints_[i - 1]).norm();
      if (seg <= 0.0) {
        std::ostringstream msg;
        msg << "path: consecutive duplicate waypoint at index " << i;
        throw InputError(msg.str());
      }
      cumulative_.push_back(cumulative_.back() + seg);
    }
  }
}

State PolylinePath::state_at(double t) const {
  const double l = length();
  const double slack = 1e-12 * std::max(1.0, l);
  if (t < -slack || t > l + slack) {
    std::ostringstream msg;
    msg << "path: parameter " << t << " outside [0, " << l << "]";
    throw InputError(msg.str());
  }
  t = std::clamp(t, 0.0, l);
  // Find the segment containing t.
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), t);
  std::size_t i = (it == cumulative_.begin()) ? 0 : (it - cumulative_.begin() - 1);
  i = std::min(i, waypoints_.size() - 2);
  const double seg_len = cumulative_[i + 1] - cumulative_[i];
  const double s = std::clamp((t - cumulative_[i]) / seg_len, 0.0, 1.0);
  return waypoints_[i] + s * (waypoints_[i + 1] - waypoints_[i]);
}

PolylinePath PolylinePath::reversed() const {
  std::vector<State> rev(waypoints_.rbegin(), waypoints_.rend());
  return PolylinePath(std::move(rev));
}

namespace {

// Integrand 1/clearance along one straight segment, parameterized by arc
// length s in [0, seg_len]. A zero-clearance probe means the cost diverges.
struct SegmentIntegrand {
  const World& world;
  const State& a;
  State direction;  // unit
  mutable bool hit_zero = false;

  double operator()(double s) const {
    const double d = world.clearance(a + s * direction);
    if (d == 0.0) {
      hit_zero = true;
      return kInf;
    }
    return 1.0 / d;
  }
};

struct QuadContext {
  double rel_tol;
  double abs_tol;
  int max_depth;
  bool depth_exhausted = false;
  double error_accum = 0.0;
};

double simpson(double h, double fa, double fm, double fb) {
  return (h / 6.0) * (fa + 4.0 * fm + fb);
}

// Recursive adaptive Simpson. `whole` is the Simpson estimate over [a, b]
// with midpoint value fm. On depth exhaustion the best local estimate is
// kept and the context flagged, so the caller can report the total estimate
// with an error bound.
double adaptive_simpson(const SegmentIntegrand& f, QuadContext& ctx, double a, double b,
                        double fa, double fm, double fb, double whole, double abs_tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  if (f.hit_zero) return kInf;
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  const double refined = left + right;
  const double delta = refined - whole;
  const double tol = std::max(abs_tol, ctx.rel_tol * std::abs(refined));
  if (std::abs(delta) <= 15.0 * tol) {
    return refined + delta / 15.0;
  }
  if (depth >= ctx.max_depth) {
    ctx.depth_exhausted = true;
    ctx.error_accum += std::abs(delta) / 15.0;
    return refined + delta / 15.0;
  }
  const double la = adaptive_simpson(f, ctx, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth + 1);
  if (f.hit_zero) return kInf;
  const double ra = adaptive_simpson(f, ctx, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth + 1);
  return la + ra;
}

}  // namespace

double reciprocal_cost(const PolylinePath& path, const World& world,
                       const QuadratureConfig& cfg) {
  validate_quadrature_config(cfg);
  const auto& waypoints = path.waypoints();
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    if (!world.is_valid(waypoints[i])) {
      std::ostringstream msg;
      msg << "path: waypoint " << i << " is invalid in this world";
      throw InputError(msg.str());
    }
  }

  const double total_len = path.length();
  QuadContext ctx{cfg.rel_tol, cfg.abs_tol, cfg.max_depth};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const State& a = waypoints[i];
    const State& b = waypoints[i + 1];
    // The integral diverges on any positive-measure invalid stretch; detect
    // it exactly instead of waiting for a probe to land inside.
    if (world.segment_hits_invalid(a, b)) return kInf;
    const double seg_len = (b - a).norm();
    SegmentIntegrand f{world, a, (b - a) / seg_len};
    const double fa = f(0.0);
    const double fm = f(0.5 * seg_len);
    const double fb = f(seg_len);
    if (f.hit_zero) return kInf;
    const double whole = simpson(seg_len, fa, fm, fb);
    const double seg_abs_tol = cfg.abs_tol * (seg_len / total_len);
    total += adaptive_simpson(f, ctx, 0.0, seg_len, fa, fm, fb, whole, seg_abs_tol, 0);
    if (f.hit_zero) return kInf;
  }
  if (ctx.depth_exhausted) {
    std::ostringstream msg;
    msg << "quadrature: max_depth " << cfg.max_depth << " exhausted; estimate " << total
        << " +/- " << ctx.error_accum;
    throw ConvergenceError(msg.str(), total, ctx.error_accum);
  }
  return total;
}

}  // namespace clearbound
