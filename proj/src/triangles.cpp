#include "goodkn/triangles.h"

#include <algorithm>
#include <stdexcept>

namespace goodkn {

Triangle::Triangle(VertexId a, VertexId b, VertexId c) : v_{a, b, c} {
  if (a == b || b == c || a == c) throw std::invalid_argument("triangle vertices must be distinct");
  std::sort(v_.begin(), v_.end());
}

SidePartition SidePartition::normalized(std::vector<VertexId> x, std::vector<VertexId> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const bool swap_sides = x.empty() ? !y.empty() : (!y.empty() && y.front() < x.front());
  if (swap_sides) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

namespace {

void check_triangle(const RotationSystem& rs, const Triangle& t) {
  for (VertexId x : t.vertices())
    if (x < 1 || x > rs.size()) throw std::invalid_argument("triangle vertex out of range");
}

// Right-sequence test at corner `at` of the cyclic triple (prev, at, next):
// w is right when it lies strictly between prev and next going
// counterclockwise around `at`.
struct Corner {
  int from;
  int span;
  int modulus;
  const RotationSystem* rs;
  VertexId at;

  Corner(const RotationSystem& r, VertexId prev, VertexId a, VertexId next)
      : modulus(r.size() - 1), rs(&r), at(a) {
    from = r.position(a, prev);
    span = (r.position(a, next) - from + modulus) % modulus;
  }

  bool right(VertexId w) const {
    return (rs->position(at, w) - from + modulus) % modulus < span;
  }
};

// Number of right memberships (0..3) of every vertex; triangle vertices get -1.
template <typename Fn>
void classify(const RotationSystem& rs, const Triangle& t, Fn&& on_vertex) {
  const VertexId a = t[0], b = t[1], c = t[2];
  const Corner at_a(rs, c, a, b);
  const Corner at_b(rs, a, b, c);
  const Corner at_c(rs, b, c, a);
  for (VertexId w = 1; w <= rs.size(); ++w) {
    if (t.contains(w)) continue;
    const int rights = at_a.right(w) + at_b.right(w) + at_c.right(w);
    on_vertex(w, rights >= 2);
  }
}

}  // namespace

SidePartition side_partition(const RotationSystem& rs, const Triangle& t) {
  check_triangle(rs, t);
  std::vector<VertexId> right, left;
  classify(rs, t, [&](VertexId w, bool is_right) { (is_right ? right : left).push_back(w); });
  return SidePartition::normalized(std::move(right), std::move(left));
}

bool is_empty(const RotationSystem& rs, const Triangle& t) {
  check_triangle(rs, t);
  int right = 0, left = 0;
  classify(rs, t, [&](VertexId, bool is_right) { ++(is_right ? right : left); });
  return right == 0 || left == 0;
}

std::vector<Triangle> empty_triangles(const RotationSystem& rs) {
  std::vector<Triangle> out;
  const int n = rs.size();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c)
        if (Triangle t(a, b, c); is_empty(rs, t)) out.push_back(t);
  return out;
}

int count_empty_triangles(const RotationSystem& rs) {
  return static_cast<int>(empty_triangles(rs).size());
}

TriangleCensus analyze_triangles(const RotationSystem& rs) {
  const int n = rs.size();
  TriangleCensus out;
  out.stats.assign(n, {});
  std::vector<VertexId> right, left;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c) {
        right.clear();
        left.clear();
        classify(rs, Triangle(a, b, c),
                 [&](VertexId w, bool is_right) { (is_right ? right : left).push_back(w); });
        if (right.empty() || left.empty()) {
          ++out.empty;
          ++out.stats[a - 1].t;
          ++out.stats[b - 1].t;
          ++out.stats[c - 1].t;
        }
        if (right.size() == 1) ++out.stats[right[0] - 1].l;
        if (left.size() == 1) ++out.stats[left[0] - 1].l;
      }
  for (auto& s : out.stats) s.lucky = s.t - s.l >= 2;
  return out;
}

VertexStats vertex_stats(const RotationSystem& rs, VertexId v) {
  if (rs.size() < 4) throw std::invalid_argument("vertex_stats needs n >= 4");
  if (v < 1 || v > rs.size()) throw std::invalid_argument("vertex out of range");
  return analyze_triangles(rs).stats[v - 1];
}

}  // namespace goodkn
