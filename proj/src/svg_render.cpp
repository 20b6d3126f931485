#include "clearbound/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace clearbound {

namespace {

struct Extent {
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;

  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  bool empty() const { return !(x0 < x1) || !(y0 < y1); }
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const Extent& extent, double width) : extent_(extent) {
    scale_ = width / (extent.x1 - extent.x0);
    width_ = width;
    height_ = (extent.y1 - extent.y0) * scale_;
  }

  double px(double x) const { return (x - extent_.x0) * scale_; }
  double py(double y) const { return (extent_.y1 - y) * scale_; }  // SVG y grows downward
  double len(double d) const { return d * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }

 private:
  Extent extent_;
  double scale_ = 1.0;
  double width_ = 0.0;
  double height_ = 0.0;
};

// Clip the extent rectangle against the invalid half-plane n.p <= offset.
std::vector<std::pair<double, double>> clip_halfplane(const Extent& e, const HalfSpace& half) {
  const std::vector<std::pair<double, double>> rect = {
      {e.x0, e.y0}, {e.x1, e.y0}, {e.x1, e.y1}, {e.x0, e.y1}};
  auto side = [&](const std::pair<double, double>& p) {
    return half.normal[0] * p.first + half.normal[1] * p.second - half.offset;
  };
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < rect.size(); ++i) {
    const auto& p = rect[i];
    const auto& q = rect[(i + 1) % rect.size()];
    const double sp = side(p);
    const double sq = side(q);
    if (sp <= 0.0) out.push_back(p);
    if ((sp <= 0.0) != (sq <= 0.0)) {
      const double s = sp / (sp - sq);
      out.push_back({p.first + s * (q.first - p.first), p.second + s * (q.second - p.second)});
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const World& world, const GeometricGraph* graph,
                       const PolylinePath* path, const RenderOptions& options) {
  if (world.dimension() != 2) {
    throw RenderError("svg rendering supports 2D scenarios only");
  }
  if (path && path->dimension() != 2) {
    throw RenderError("svg rendering supports 2D paths only");
  }

  Extent extent;
  if (world.bounds()) {
    extent.add(world.bounds()->min_corner[0], world.bounds()->min_corner[1]);
    extent.add(world.bounds()->max_corner[0], world.bounds()->max_corner[1]);
  }
  for (const auto& obstacle : world.obstacles()) {
    if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
      extent.add(sphere->center[0] - sphere->radius, sphere->center[1] - sphere->radius);
      extent.add(sphere->center[0] + sphere->radius, sphere->center[1] + sphere->radius);
    } else if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
      extent.add(box->min_corner[0], box->min_corner[1]);
      extent.add(box->max_corner[0], box->max_corner[1]);
    }
  }
  if (graph) {
    for (const auto& v : graph->vertices) extent.add(v[0], v[1]);
  }
  if (path) {
    for (const auto& w : path->waypoints()) extent.add(w[0], w[1]);
  }
  if (extent.empty()) {
    extent.add(0.0, 0.0);
    extent.add(1.0, 1.0);
  }
  const double pad = options.margin * std::max(extent.x1 - extent.x0, extent.y1 - extent.y0);
  extent.add(extent.x0 - pad, extent.y0 - pad);
  extent.add(extent.x1 + pad, extent.y1 + pad);

  const Canvas canvas(extent, 800.0);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas.width())
      << "\" height=\"" << fmt(canvas.height()) << "\" viewBox=\"0 0 " << fmt(canvas.width())
      << " " << fmt(canvas.height()) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(canvas.width()) << "\" height=\""
      << fmt(canvas.height()) << "\" fill=\"#ffffff\"/>\n";

  if (world.bounds()) {
    const auto& b = *world.bounds();
    svg << "<rect x=\"" << fmt(canvas.px(b.min_corner[0])) << "\" y=\""
        << fmt(canvas.py(b.max_corner[1])) << "\" width=\""
        << fmt(canvas.len(b.max_corner[0] - b.min_corner[0])) << "\" height=\""
        << fmt(canvas.len(b.max_corner[1] - b.min_corner[1]))
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  }

  for (const auto& obstacle : world.obstacles()) {
    if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
      svg << "<circle cx=\"" << fmt(canvas.px(sphere->center[0])) << "\" cy=\""
          << fmt(canvas.py(sphere->center[1])) << "\" r=\"" << fmt(canvas.len(sphere->radius))
          << "\" fill=\"#8a8a8a\"/>\n";
    } else if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
      svg << "<rect x=\"" << fmt(canvas.px(box->min_corner[0])) << "\" y=\""
          << fmt(canvas.py(box->max_corner[1])) << "\" width=\""
          << fmt(canvas.len(box->max_corner[0] - box->min_corner[0])) << "\" height=\""
          << fmt(canvas.len(box->max_corner[1] - box->min_corner[1]))
          << "\" fill=\"#8a8a8a\"/>\n";
    } else {
      const auto& half = std::get<HalfSpace>(obstacle);
      const auto polygon = clip_halfplane(extent, half);
      if (polygon.size() >= 3) {
        svg << "<polygon points=\"";
        for (std::size_t i = 0; i < polygon.size(); ++i) {
          if (i) svg << " ";
          svg << fmt(canvas.px(polygon[i].first)) << "," << fmt(canvas.py(polygon[i].second));
        }
        svg << "\" fill=\"#8a8a8a\"/>\n";
      }
    }
  }

  if (graph && options.draw_graph) {
    svg << "<g stroke=\"#9db8d2\" stroke-width=\"0.6\">\n";
    for (std::size_t u = 0; u < graph->adjacency.size(); ++u) {
      for (const auto& [v, len] : graph->adjacency[u]) {
        (void)len;
        if (static_cast<std::size_t>(v) < u) continue;  // draw each edge once
        svg << "<line x1=\"" << fmt(canvas.px(graph->vertices[u][0])) << "\" y1=\""
            << fmt(canvas.py(graph->vertices[u][1])) << "\" x2=\""
            << fmt(canvas.px(graph->vertices[v][0])) << "\" y2=\""
            << fmt(canvas.py(graph->vertices[v][1])) << "\"/>\n";
      }
    }
    svg << "</g>\n";
  }

  if (path && options.draw_clearance_discs) {
    for (const auto& w : path->waypoints()) {
      const double d = world.clearance(w);
      if (!std::isfinite(d)) continue;
      svg << "<circle cx=\"" << fmt(canvas.px(w[0])) << "\" cy=\"" << fmt(canvas.py(w[1]))
          << "\" r=\"" << fmt(canvas.len(d))
          << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    }
  }

  if (path) {
    svg << "<path d=\"";
    const auto& waypoints = path->waypoints();
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
      svg << (i == 0 ? "M " : " L ") << fmt(canvas.px(waypoints[i][0])) << " "
          << fmt(canvas.py(waypoints[i][1]));
    }
    svg << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace clearbound
