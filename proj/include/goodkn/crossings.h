#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "goodkn/edges.h"
#include "goodkn/k4_table.h"
#include "goodkn/triangles.h"

namespace goodkn {

/// Thrown when a 4-vertex sub-system has no good drawing, which certifies
/// that the whole system has none.
class UnrealizableSubsystem : public std::runtime_error {
 public:
  explicit UnrealizableSubsystem(const std::array<VertexId, 4>& q);
  const std::array<VertexId, 4>& vertices() const { return q_; }

 private:
  std::array<VertexId, 4> q_;
};

/// Every 4-vertex sub-system is realizable (necessary for realizability).
bool k4_consistent(const RotationSystem& rs, const K4CrossingTable& table = k4_table());

/// Crossing edge pairs of any good drawing with rotation system rs, one per
/// 4-subset whose sub-system crosses. Sorted. Throws UnrealizableSubsystem.
std::vector<EdgePair> crossing_pairs(const RotationSystem& rs, const K4CrossingTable& table = k4_table());

/// Triangles {v, u, w} with u, w consecutive around v and uw crossed by no
/// edge at v; these are exactly the empty star triangles at v.
std::vector<Triangle> empty_star_triangles(const RotationSystem& rs, VertexId v,
                                           const std::vector<EdgePair>& crossings);

/// Star triangles at v (uw not crossed by an edge at v), without regard to
/// emptiness. Sorted.
std::vector<Triangle> star_triangles(const RotationSystem& rs, VertexId v,
                                     const std::vector<EdgePair>& crossings);

}  // namespace goodkn
