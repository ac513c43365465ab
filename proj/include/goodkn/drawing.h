#pragma once

#include <vector>

#include "goodkn/edges.h"
#include "goodkn/realizer.h"
#include "goodkn/triangles.h"

namespace goodkn {

/// Rotation system read back from the map at the original vertices.
RotationSystem extract_rotation(const RealizedDrawing& d);

/// One pair per crossing node, sorted.
std::vector<EdgePair> crossing_set(const RealizedDrawing& d);

/// Darts of the segments of `e`, walking from e.a to e.b.
std::vector<PlanarMap::Dart> edge_chain(const PlanarMap& map, const Edge& e);

/// Edges crossing `e`, in order from e.a to e.b.
std::vector<Edge> crossings_along(const PlanarMap& map, const Edge& e);

/// Sides of the closed curve formed by the triangle's three edges, found by
/// flood-filling faces without stepping over the curve.
SidePartition region_partition(const RealizedDrawing& d, const Triangle& t);

/// Face of every dart plus, for a triangle, which side of it each face is on.
struct TriangleRegions {
  std::vector<int> face_of_dart;
  int face_count = 0;
  std::vector<int> side_of_face;  // 0 or 1
  std::vector<VertexId> side[2];  // non-triangle original vertices per side
};
TriangleRegions triangle_regions(const RealizedDrawing& d, const Triangle& t);

/// True iff edge uw ({u, w} = t minus apex) is crossed by no edge at apex.
bool is_star_triangle(const RealizedDrawing& d, const Triangle& t, VertexId apex);

enum class Emptiness { kInteriorEmpty, kExteriorEmpty, kNonEmpty, kBothEmpty };

/// Treats face `outer` as the unbounded cell: the side of t containing it
/// is the exterior. Throws std::out_of_range for a bad face id.
Emptiness classify_with_outer_cell(const RealizedDrawing& d, int outer, const Triangle& t);

/// Good-drawing conditions checked on the map: each pair of edges crosses at
/// most once, adjacent edges never cross, and every edge chain is simple
/// and runs between its own endpoints.
bool satisfies_good_drawing_axioms(const RealizedDrawing& d, std::string* why = nullptr);

}  // namespace goodkn
