#include "goodkn/crossings.h"

#include <algorithm>
#include <string>

namespace goodkn {

UnrealizableSubsystem::UnrealizableSubsystem(const std::array<VertexId, 4>& q)
    : std::runtime_error("sub-system on {" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                         std::to_string(q[2]) + "," + std::to_string(q[3]) + "} is not realizable"),
      q_(q) {}

namespace {

template <typename Fn>
void for_each_quadruple(int n, Fn&& fn) {
  std::array<VertexId, 4> q{};
  for (q[0] = 1; q[0] <= n; ++q[0])
    for (q[1] = q[0] + 1; q[1] <= n; ++q[1])
      for (q[2] = q[1] + 1; q[2] <= n; ++q[2])
        for (q[3] = q[2] + 1; q[3] <= n; ++q[3])
          if (!fn(q)) return;
}

// Edges of K_n at v crossing uw, per the crossing list.
bool crossed_by_edge_at(const std::vector<EdgePair>& crossings, const Edge& uw, VertexId v) {
  for (const EdgePair& p : crossings) {
    if (p.first == uw && p.second.incident_to(v)) return true;
    if (p.second == uw && p.first.incident_to(v)) return true;
  }
  return false;
}

}  // namespace

bool k4_consistent(const RotationSystem& rs, const K4CrossingTable& table) {
  bool ok = true;
  for_each_quadruple(rs.size(), [&](const std::array<VertexId, 4>& q) {
    ok = table.realizable(K4CrossingTable::index_of(rs, q));
    return ok;
  });
  return ok;
}

std::vector<EdgePair> crossing_pairs(const RotationSystem& rs, const K4CrossingTable& table) {
  std::vector<EdgePair> out;
  for_each_quadruple(rs.size(), [&](const std::array<VertexId, 4>& q) {
    const K4Entry& entry = table[K4CrossingTable::index_of(rs, q)];
    if (entry.outcome == K4Outcome::kUnrealizable) throw UnrealizableSubsystem(q);
    if (entry.outcome == K4Outcome::kCrossing) {
      const Edge& e = entry.crossing.first;
      const Edge& f = entry.crossing.second;
      out.emplace_back(Edge(q[e.a - 1], q[e.b - 1]), Edge(q[f.a - 1], q[f.b - 1]));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> star_triangles(const RotationSystem& rs, VertexId v,
                                     const std::vector<EdgePair>& crossings) {
  std::vector<Triangle> out;
  for (VertexId u = 1; u <= rs.size(); ++u)
    for (VertexId w = u + 1; w <= rs.size(); ++w) {
      if (u == v || w == v) continue;
      if (!crossed_by_edge_at(crossings, Edge(u, w), v)) out.emplace_back(v, u, w);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> empty_star_triangles(const RotationSystem& rs, VertexId v,
                                           const std::vector<EdgePair>& crossings) {
  if (rs.size() < 4) throw std::invalid_argument("star triangles need n >= 4");
  std::vector<Triangle> out;
  for (VertexId u : rs.rotation(v)) {
    const VertexId w = rs.successor(v, u);
    if (!crossed_by_edge_at(crossings, Edge(u, w), v)) out.emplace_back(v, u, w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace goodkn
