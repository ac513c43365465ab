#include "goodkn/render.h"

#include <cmath>
#include <iterator>
#include <numbers>
#include <sstream>

#include "goodkn/drawing.h"

namespace goodkn {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

bool simple_boundary(const PlanarMap& map, const std::vector<PlanarMap::Dart>& cycle) {
  std::vector<char> seen(map.node_count(), 0);
  for (PlanarMap::Dart d : cycle) {
    if (seen[map.origin(d)]) return false;
    seen[map.origin(d)] = 1;
  }
  return true;
}

}  // namespace

std::vector<Point> layout(const PlanarMap& map) {
  int faces = 0;
  const std::vector<int> face_of = map.face_of_darts(&faces);
  std::vector<PlanarMap::Dart> representative(faces, PlanarMap::kNoDart);
  for (PlanarMap::Dart d = 0; d < map.dart_count(); ++d)
    if (representative[face_of[d]] == PlanarMap::kNoDart) representative[face_of[d]] = d;

  int outer = -1;
  std::size_t best = 0;
  for (int f = 0; f < faces; ++f) {
    const auto cycle = map.face_cycle(representative[f]);
    const bool simple = simple_boundary(map, cycle);
    if (simple && cycle.size() > best) best = cycle.size(), outer = f;
  }
  if (outer < 0)
    for (int f = 0; f < faces; ++f)
      if (map.face_cycle(representative[f]).size() > best) best = map.face_cycle(representative[f]).size(), outer = f;

  // Nodes 0..N-1 are map nodes; N + f is the helper inside face f.
  const int nodes = map.node_count();
  std::vector<Point> pos(nodes + faces);
  std::vector<char> fixed(nodes + faces, 0);
  std::vector<std::vector<int>> adj(nodes + faces);
  for (PlanarMap::Dart d = 0; d < map.dart_count(); ++d) {
    adj[map.origin(d)].push_back(map.target(d));
    if (face_of[d] != outer) {
      adj[map.origin(d)].push_back(nodes + face_of[d]);
      adj[nodes + face_of[d]].push_back(map.origin(d));
    }
  }
  if (outer >= 0) {
    const auto cycle = map.face_cycle(representative[outer]);
    // Faces lie to the left of their darts, so the outer boundary is walked
    // clockwise when seen from inside; place it with decreasing angle.
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) / cycle.size();
      const int x = map.origin(cycle[i]);
      if (fixed[x]) continue;
      pos[x] = {std::cos(a), std::sin(a)};
      fixed[x] = 1;
    }
  }
  for (int sweep = 0; sweep < 20000; ++sweep) {
    double moved = 0;
    for (int x = 0; x < nodes + faces; ++x) {
      if (fixed[x] || adj[x].empty()) continue;
      Point c;
      for (int y : adj[x]) c.x += pos[y].x, c.y += pos[y].y;
      c.x /= adj[x].size();
      c.y /= adj[x].size();
      moved = std::max(moved, std::abs(c.x - pos[x].x) + std::abs(c.y - pos[x].y));
      pos[x] = c;
    }
    if (moved < 1e-12) break;
  }
  pos.resize(nodes);
  return pos;
}

std::string render_svg(const RealizedDrawing& d) {
  const PlanarMap& map = d.map;
  const std::vector<Point> pos = layout(map);
  const double size = 600, margin = 40;
  auto sx = [&](const Point& p) { return margin + (p.x + 1) / 2 * (size - 2 * margin); };
  auto sy = [&](const Point& p) { return margin + (1 - p.y) / 2 * (size - 2 * margin); };

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const int n = d.source.size();
  int index = 0;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b, ++index) {
      const Edge e(a, b);
      out << "<polyline class=\"edge\" data-edge=\"" << e.to_string() << "\" fill=\"none\" stroke=\""
          << kPalette[index % std::size(kPalette)] << "\" stroke-width=\"2\" points=\"";
      const auto chain = edge_chain(map, e);
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const Point& p = pos[map.origin(chain[i])];
        out << (i ? " " : "") << sx(p) << ',' << sy(p);
      }
      const Point& end = pos[map.target(chain.back())];
      out << ' ' << sx(end) << ',' << sy(end) << "\"/>\n";
    }
  for (PlanarMap::Node x = map.original_count(); x < map.node_count(); ++x)
    out << "<circle class=\"crossing\" cx=\"" << sx(pos[x]) << "\" cy=\"" << sy(pos[x])
        << "\" r=\"3\" fill=\"black\"/>\n";
  for (VertexId v = 1; v <= n; ++v) {
    const Point& p = pos[PlanarMap::node_of(v)];
    out << "<circle class=\"vertex\" cx=\"" << sx(p) << "\" cy=\"" << sy(p)
        << "\" r=\"9\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << sx(p) << "\" y=\"" << sy(p) + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace goodkn
