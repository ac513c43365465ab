#pragma once

// Straight-line drawings of K_n on integer points in general position.
// Everything here is computed from coordinates only and shares no code with
// the library, so it can serve as ground truth for the combinatorial side.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

struct Pt {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

inline std::int64_t orient(const Pt& a, const Pt& b, const Pt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool general_position(const std::vector<Pt>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i].x == p[j].x && p[i].y == p[j].y) return false;
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (orient(p[i], p[j], p[k]) == 0) return false;
    }
  return true;
}

// Points on the parabola y = x^2; walking by increasing x goes
// counterclockwise around the hull.
inline std::vector<Pt> convex_points(int n) {
  std::vector<Pt> p;
  for (int i = 1; i <= n; ++i) p.push_back({i, static_cast<std::int64_t>(i) * i});
  return p;
}

inline std::vector<Pt> random_points(int n, std::mt19937& rng, int range = 1000) {
  std::uniform_int_distribution<int> coord(0, range);
  for (;;) {
    std::vector<Pt> p;
    for (int i = 0; i < n; ++i) p.push_back({coord(rng), coord(rng)});
    if (general_position(p)) return p;
  }
}

// Counterclockwise order of the other points around p[i], 1-based labels,
// starting anywhere.
inline std::vector<int> angular_order(const std::vector<Pt>& p, int i) {
  const Pt& c = p[i];
  auto half = [&](const Pt& q) {
    const std::int64_t dx = q.x - c.x, dy = q.y - c.y;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::vector<int> idx;
  for (int j = 0; j < static_cast<int>(p.size()); ++j)
    if (j != i) idx.push_back(j);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const int ha = half(p[a]), hb = half(p[b]);
    if (ha != hb) return ha < hb;
    return orient(c, p[a], p[b]) > 0;
  });
  for (int& j : idx) ++j;
  return idx;
}

inline std::vector<std::vector<int>> rotations(const std::vector<Pt>& p) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) out.push_back(angular_order(p, i));
  return out;
}

// Labels (1-based) strictly inside triangle abc (1-based labels).
inline std::vector<int> inside(const std::vector<Pt>& p, int a, int b, int c) {
  const Pt &A = p[a - 1], &B = p[b - 1], &C = p[c - 1];
  const bool ccw = orient(A, B, C) > 0;
  std::vector<int> out;
  for (int v = 1; v <= static_cast<int>(p.size()); ++v) {
    if (v == a || v == b || v == c) continue;
    const Pt& q = p[v - 1];
    const bool in = ccw ? (orient(A, B, q) > 0 && orient(B, C, q) > 0 && orient(C, A, q) > 0)
                        : (orient(A, B, q) < 0 && orient(B, C, q) < 0 && orient(C, A, q) < 0);
    if (in) out.push_back(v);
  }
  return out;
}

inline std::vector<int> outside(const std::vector<Pt>& p, int a, int b, int c) {
  const auto in = inside(p, a, b, c);
  std::vector<int> out;
  for (int v = 1; v <= static_cast<int>(p.size()); ++v)
    if (v != a && v != b && v != c && !std::binary_search(in.begin(), in.end(), v)) out.push_back(v);
  return out;
}

// On the sphere a triangle is empty when either side has no other point.
inline bool empty_triangle(const std::vector<Pt>& p, int a, int b, int c) {
  const auto in = inside(p, a, b, c).size();
  return in == 0 || in == p.size() - 3;
}

inline int count_empty(const std::vector<Pt>& p) {
  const int n = static_cast<int>(p.size());
  int count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) count += empty_triangle(p, a, b, c);
  return count;
}

inline bool segments_cross(const std::vector<Pt>& p, int a, int b, int c, int d) {
  if (a == c || a == d || b == c || b == d) return false;
  const Pt &A = p[a - 1], &B = p[b - 1], &C = p[c - 1], &D = p[d - 1];
  return (orient(A, B, C) > 0) != (orient(A, B, D) > 0) && (orient(C, D, A) > 0) != (orient(C, D, B) > 0);
}

// Crossing edge pairs ((a,b),(c,d)) with a<b, c<d and (a,b) < (c,d).
using Seg = std::pair<int, int>;
inline std::vector<std::pair<Seg, Seg>> crossings(const std::vector<Pt>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<Seg> segs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) segs.push_back({a, b});
  std::vector<std::pair<Seg, Seg>> out;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (segments_cross(p, segs[i].first, segs[i].second, segs[j].first, segs[j].second))
        out.push_back({segs[i], segs[j]});
  return out;
}

// Segment uw is crossed by no segment at v.
inline bool star_triangle(const std::vector<Pt>& p, int v, int u, int w) {
  for (int x = 1; x <= static_cast<int>(p.size()); ++x)
    if (x != v && segments_cross(p, v, x, u, w)) return false;
  return true;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
