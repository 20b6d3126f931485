#pragma once

#include <string>

#include "clearbound/planner.hpp"

namespace clearbound {

struct RenderOptions {
  double margin = 0.05;  // padding around the drawn extent, as a fraction
  bool draw_graph = true;
  bool draw_clearance_discs = false;  // one disc per path waypoint
};

// Deterministic SVG rendering of a 2D world with an optional graph and
// solution path. Throws RenderError for dimensions other than 2.
std::string render_svg(const World& world, const GeometricGraph* graph,
                       const PolylinePath* path, const RenderOptions& options = {});

}  // namespace clearbound
