#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "goodkn/rotation_system.h"

namespace goodkn {

/// Undirected edge of K_n with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId x, VertexId y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y) throw std::invalid_argument("edge endpoints must differ");
  }

  bool incident_to(VertexId v) const { return a == v || b == v; }
  bool shares_endpoint(const Edge& o) const { return incident_to(o.a) || incident_to(o.b); }
  VertexId other(VertexId v) const { return v == a ? b : a; }

  std::string to_string() const { return std::to_string(a) + "-" + std::to_string(b); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered pair of edges, first < second.
struct EdgePair {
  Edge first;
  Edge second;

  EdgePair() = default;
  EdgePair(Edge x, Edge y) : first(std::min(x, y)), second(std::max(x, y)) {}

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Dense index of edge {a, b} of K_n in lexicographic order.
inline int edge_index(int n, VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  // Edges (1,2)..(1,n), (2,3).. : offset of row a is sum_{i<a} (n - i).
  return (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
}

inline int edge_count(int n) { return n * (n - 1) / 2; }

}  // namespace goodkn
