#include "goodkn/drawing.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace goodkn {

using Dart = PlanarMap::Dart;

RotationSystem extract_rotation(const RealizedDrawing& d) {
  const PlanarMap& map = d.map;
  const int n = map.original_count();
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId v = 1; v <= n; ++v)
    for (Dart x : map.darts_around(PlanarMap::node_of(v))) rot[v - 1].push_back(map.edge_of(x).other(v));
  return RotationSystem(rot);
}

std::vector<EdgePair> crossing_set(const RealizedDrawing& d) {
  std::vector<EdgePair> out;
  for (int x = d.map.original_count(); x < d.map.node_count(); ++x) {
    const auto& info = d.map.node(x);
    out.emplace_back(info.crossing_first, info.crossing_second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Dart> edge_chain(const PlanarMap& map, const Edge& e) {
  std::vector<Dart> chain;
  Dart d = map.dart_toward(e.a, e.b);
  if (d == PlanarMap::kNoDart) throw std::invalid_argument("edge " + e.to_string() + " not drawn");
  for (int guard = 0; guard <= map.dart_count(); ++guard) {
    chain.push_back(d);
    const int at = map.target(d);
    if (!map.is_crossing(at)) return chain;
    // Straight through the crossing: the dart opposite the arrival.
    d = map.rot_next(map.rot_next(PlanarMap::twin(d)));
  }
  throw std::logic_error("edge chain does not terminate");
}

std::vector<Edge> crossings_along(const PlanarMap& map, const Edge& e) {
  std::vector<Edge> out;
  const auto chain = edge_chain(map, e);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& info = map.node(map.target(chain[i]));
    out.push_back(info.crossing_first == e ? info.crossing_second : info.crossing_first);
  }
  return out;
}

TriangleRegions triangle_regions(const RealizedDrawing& d, const Triangle& t) {
  const PlanarMap& map = d.map;
  TriangleRegions out;
  out.face_of_dart = map.face_of_darts(&out.face_count);
  const Edge sides[3] = {Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])};
  auto on_curve = [&](Dart x) {
    const Edge& e = map.edge_of(x);
    return e == sides[0] || e == sides[1] || e == sides[2];
  };

  // Faces are adjacent across any segment that is not part of the curve.
  std::vector<std::vector<int>> adjacent(out.face_count);
  for (Dart x = 0; x < map.dart_count(); ++x)
    if (!on_curve(x)) adjacent[out.face_of_dart[x]].push_back(out.face_of_dart[PlanarMap::twin(x)]);

  out.side_of_face.assign(out.face_count, -1);
  int components = 0;
  for (int f = 0; f < out.face_count; ++f) {
    if (out.side_of_face[f] != -1) continue;
    if (components == 2) throw std::logic_error("triangle splits the sphere into more than two regions");
    std::vector<int> stack{f};
    out.side_of_face[f] = components;
    while (!stack.empty()) {
      const int g = stack.back();
      stack.pop_back();
      for (int h : adjacent[g])
        if (out.side_of_face[h] == -1) {
          out.side_of_face[h] = components;
          stack.push_back(h);
        }
    }
    ++components;
  }
  if (components != 2) throw std::logic_error("triangle does not separate the sphere");

  for (VertexId v = 1; v <= map.original_count(); ++v) {
    if (t.contains(v)) continue;
    const Dart x = map.node(PlanarMap::node_of(v)).first_dart;
    out.side[out.side_of_face[out.face_of_dart[x]]].push_back(v);
  }
  return out;
}

SidePartition region_partition(const RealizedDrawing& d, const Triangle& t) {
  TriangleRegions r = triangle_regions(d, t);
  return SidePartition::normalized(std::move(r.side[0]), std::move(r.side[1]));
}

bool is_star_triangle(const RealizedDrawing& d, const Triangle& t, VertexId apex) {
  if (!t.contains(apex)) throw std::invalid_argument("apex must be a triangle vertex");
  VertexId ends[2];
  int k = 0;
  for (VertexId x : t.vertices())
    if (x != apex) ends[k++] = x;
  for (const Edge& crosser : crossings_along(d.map, Edge(ends[0], ends[1])))
    if (crosser.incident_to(apex)) return false;
  return true;
}

Emptiness classify_with_outer_cell(const RealizedDrawing& d, int outer, const Triangle& t) {
  const int faces = d.map.face_count();
  if (outer < 0 || outer >= faces) throw std::out_of_range("face id " + std::to_string(outer) + " out of range");
  const TriangleRegions r = triangle_regions(d, t);
  const int exterior = r.side_of_face[outer];
  const bool interior_empty = r.side[1 - exterior].empty();
  const bool exterior_empty = r.side[exterior].empty();
  if (interior_empty && exterior_empty) return Emptiness::kBothEmpty;
  if (interior_empty) return Emptiness::kInteriorEmpty;
  if (exterior_empty) return Emptiness::kExteriorEmpty;
  return Emptiness::kNonEmpty;
}

bool satisfies_good_drawing_axioms(const RealizedDrawing& d, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const PlanarMap& map = d.map;
  std::string inner;
  if (!map.check_invariants(&inner)) return fail(inner);
  std::set<EdgePair> pairs;
  for (int x = map.original_count(); x < map.node_count(); ++x) {
    const auto& info = map.node(x);
    if (info.crossing_first.shares_endpoint(info.crossing_second))
      return fail("adjacent edges " + info.crossing_first.to_string() + " and " +
                  info.crossing_second.to_string() + " cross");
    if (!pairs.emplace(info.crossing_first, info.crossing_second).second)
      return fail("edges " + info.crossing_first.to_string() + " and " +
                  info.crossing_second.to_string() + " cross twice");
  }
  const int n = map.original_count();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) {
      const Edge e(a, b);
      std::vector<Dart> chain;
      try {
        chain = edge_chain(map, e);
      } catch (const std::exception& ex) {
        return fail(ex.what());
      }
      if (map.target(chain.back()) != PlanarMap::node_of(b))
        return fail("edge " + e.to_string() + " does not end at its endpoint");
      std::set<int> nodes;
      for (Dart x : chain)
        if (!nodes.insert(map.target(x)).second) return fail("edge " + e.to_string() + " is not simple");
      for (Dart x : chain)
        if (map.edge_of(x) != e) return fail("edge chain leaves edge " + e.to_string());
    }
  return true;
}

}  // namespace goodkn
