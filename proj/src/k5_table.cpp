#include "goodkn/k5_table.h"

#include <algorithm>

#include "goodkn/realizer.h"

namespace goodkn {

namespace {

// Permutations of {1, 2, 3} in lexicographic order.
constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

}  // namespace

int K5Table::digit(const std::array<int, 4>& positions) {
  std::array<int, 3> order{1, 2, 3};
  auto offset = [&](int j) {
    const int d = positions[j] - positions[0];
    return d < 0 ? d + 1024 : d;
  };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return offset(x) < offset(y); });
  return static_cast<int>(std::find(kPermutations.begin(), kPermutations.end(), order) - kPermutations.begin());
}

int K5Table::index_of(const RotationSystem& rs, const std::array<VertexId, 5>& q) {
  int index = 0;
  for (int i = 4; i >= 0; --i) {
    std::array<int, 4> p{};
    int k = 0;
    for (int j = 0; j < 5; ++j)
      if (j != i) p[k++] = rs.position(q[i], q[j]);
    index = index * 6 + digit(p);
  }
  return index;
}

RotationSystem K5Table::system_at(int index) {
  std::vector<std::vector<VertexId>> rot(5);
  for (VertexId x = 1; x <= 5; ++x, index /= 6) {
    std::vector<VertexId> others;
    for (VertexId y = 1; y <= 5; ++y)
      if (y != x) others.push_back(y);
    std::vector<VertexId> r{others[0]};
    for (int j : kPermutations[index % 6]) r.push_back(others[j]);
    rot[x - 1] = r;
  }
  return RotationSystem(rot);
}

K5Table build_k5_table() {
  K5Table table;
  for (int i = 0; i < K5Table::kSize; ++i) table.set(i, realize(K5Table::system_at(i)).realizable());
  return table;
}

const K5Table& k5_table() {
  static const K5Table table = build_k5_table();
  return table;
}

bool k5_consistent(const RotationSystem& rs, const K5Table& table) {
  const int n = rs.size();
  std::array<VertexId, 5> q{};
  for (q[0] = 1; q[0] <= n; ++q[0])
    for (q[1] = q[0] + 1; q[1] <= n; ++q[1])
      for (q[2] = q[1] + 1; q[2] <= n; ++q[2])
        for (q[3] = q[2] + 1; q[3] <= n; ++q[3])
          for (q[4] = q[3] + 1; q[4] <= n; ++q[4])
            if (!table.realizable(K5Table::index_of(rs, q))) return false;
  return true;
}

}  // namespace goodkn
