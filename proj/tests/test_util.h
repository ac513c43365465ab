#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "goodkn/rotation_system.h"

namespace test {

using goodkn::RotationSystem;
using goodkn::VertexId;

// Triangle 1 2 3 with vertex 4 inside.
inline RotationSystem planar_k4() { return RotationSystem({{2, 4, 3}, {3, 4, 1}, {1, 4, 2}, {1, 2, 3}}); }

inline std::vector<VertexId> random_permutation(int n, std::mt19937& rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<VertexId> inverse(const std::vector<VertexId>& p) {
  std::vector<VertexId> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<VertexId>(i + 1);
  return q;
}

// Uniform over all rotation systems of K_n, realizable or not.
inline RotationSystem random_rotation_system(int n, std::mt19937& rng) {
  std::vector<std::vector<VertexId>> r(n);
  for (VertexId v = 1; v <= n; ++v) {
    for (VertexId u = 1; u <= n; ++u)
      if (u != v) r[v - 1].push_back(u);
    std::shuffle(r[v - 1].begin(), r[v - 1].end(), rng);
  }
  return RotationSystem(r);
}

// Calls fn on every rotation system of K_n ((n-2)!^n of them).
template <typename Fn>
void for_each_rotation_system(int n, Fn&& fn) {
  std::vector<std::vector<VertexId>> tails(n);
  for (VertexId v = 1; v <= n; ++v)
    for (VertexId u = 1; u <= n; ++u)
      if (u != v) tails[v - 1].push_back(u);
  // Fix the smallest neighbour first; permute the rest.
  std::vector<std::vector<VertexId>> r = tails;
  auto rec = [&](auto& self, int v) -> void {
    if (v == n) {
      fn(RotationSystem(r));
      return;
    }
    std::vector<VertexId> rest(tails[v].begin() + 1, tails[v].end());
    do {
      r[v] = {tails[v][0]};
      r[v].insert(r[v].end(), rest.begin(), rest.end());
      self(self, v + 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  rec(rec, 0);
}

}  // namespace test
