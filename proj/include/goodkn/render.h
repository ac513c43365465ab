#pragma once

#include <string>
#include <vector>

#include "goodkn/realizer.h"

namespace goodkn {

struct Point {
  double x = 0;
  double y = 0;
};

/// Straight-line positions for every node of the planar map. The outer face
/// is a largest face with a simple boundary, placed on a regular polygon;
/// the other nodes are found by Tutte's barycentric method after adding one
/// helper vertex inside each inner face.
std::vector<Point> layout(const PlanarMap& map);

/// SVG image of the drawing: original edges are polylines through their
/// crossings, each crossing gets one marker (class "crossing") and each
/// vertex a labeled dot.
std::string render_svg(const RealizedDrawing& d);

}  // namespace goodkn
