#pragma once

#include <array>
#include <bitset>

#include "goodkn/rotation_system.h"

namespace goodkn {

/// Which of the 6^5 rotation systems of K_5 realize() accepts.
///
/// Around each vertex the other four are read counterclockwise starting from
/// the smallest; the order of the remaining three is one of six permutations
/// (ranked lexicographically). The index packs these five digits in base 6,
/// least significant digit for the smallest vertex.
class K5Table {
 public:
  static constexpr int kSize = 7776;

  /// Digit of one vertex from the positions of its four other vertices,
  /// given in increasing vertex order. Positions only need to be distinct.
  static int digit(const std::array<int, 4>& positions);
  /// Index of the sub-system induced on q[0] < ... < q[4].
  static int index_of(const RotationSystem& rs, const std::array<VertexId, 5>& q);
  static RotationSystem system_at(int index);

  bool realizable(int index) const { return realizable_[index]; }
  std::size_t realizable_count() const { return realizable_.count(); }

  void set(int index, bool ok) { realizable_[index] = ok; }

 private:
  std::bitset<kSize> realizable_;
};

K5Table build_k5_table();

/// Process-wide table, built on first use.
const K5Table& k5_table();

/// Every 5-vertex sub-system is realizable.
bool k5_consistent(const RotationSystem& rs, const K5Table& table = k5_table());

}  // namespace goodkn
