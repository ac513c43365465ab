#pragma once

#include <array>
#include <compare>
#include <vector>

#include "goodkn/rotation_system.h"

namespace goodkn {

/// Unordered triple of distinct vertices, stored sorted.
class Triangle {
 public:
  /// Throws std::invalid_argument if two labels coincide.
  Triangle(VertexId a, VertexId b, VertexId c);

  const std::array<VertexId, 3>& vertices() const { return v_; }
  VertexId operator[](int i) const { return v_[i]; }
  bool contains(VertexId x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;

 private:
  std::array<VertexId, 3> v_;
};

/// The two vertex sets a triangle separates. Unordered: side_a is the side
/// holding the smallest remaining vertex, so equal partitions compare equal.
struct SidePartition {
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;

  static SidePartition normalized(std::vector<VertexId> x, std::vector<VertexId> y);

  bool has_empty_side() const { return side_a.empty() || side_b.empty(); }
  friend bool operator==(const SidePartition&, const SidePartition&) = default;
};

/// Left/right classification read off the rotation scheme alone. Each
/// non-triangle vertex lands on the side holding at least two of its three
/// edges to the triangle. Requires n >= 3; for n == 3 both sides are empty.
SidePartition side_partition(const RotationSystem& rs, const Triangle& t);

bool is_empty(const RotationSystem& rs, const Triangle& t);

/// All empty triangles in lexicographic order.
std::vector<Triangle> empty_triangles(const RotationSystem& rs);
int count_empty_triangles(const RotationSystem& rs);

struct VertexStats {
  int t = 0;  // empty triangles incident to v
  int l = 0;  // triangles in which v is alone on one side
  bool lucky = false;  // t - l >= 2

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

/// Throws std::invalid_argument for n < 4.
VertexStats vertex_stats(const RotationSystem& rs, VertexId v);

/// Stats of every vertex (index v-1) plus the empty-triangle count, from a
/// single pass over all triples.
struct TriangleCensus {
  int empty = 0;
  std::vector<VertexStats> stats;
};
TriangleCensus analyze_triangles(const RotationSystem& rs);

}  // namespace goodkn
