#include "goodkn/realizer.h"

#include <algorithm>
#include <bit>
#include <string>

#include "goodkn/k4_table.h"

namespace goodkn {

SearchLimitExceeded::SearchLimitExceeded(std::uint64_t explored, int frontier)
    : std::runtime_error("realization search exceeded its node limit after " +
                         std::to_string(explored) + " nodes with " + std::to_string(frontier) +
                         " edges placed"),
      explored_(explored),
      frontier_(frontier) {}

namespace {

using Dart = PlanarMap::Dart;
using Node = PlanarMap::Node;
using Mask = std::uint64_t;

class Search {
 public:
  Search(const RotationSystem& rs, const RealizeOptions& options,
         const std::function<bool(const RealizedDrawing&)>& visit)
      : rs_(rs), n_(rs.size()), options_(options), visit_(visit) {}

  // Returns false when a K_4 sub-system already rules the system out.
  bool prepare() {
    if (n_ > kMaxRealizeVertices)
      throw std::invalid_argument("realize supports at most " + std::to_string(kMaxRealizeVertices) +
                                  " vertices");
    const int m = edge_count(n_);
    edges_.resize(m);
    for (VertexId a = 1; a <= n_; ++a)
      for (VertexId b = a + 1; b <= n_; ++b) edges_[edge_index(n_, a, b)] = Edge(a, b);

    crosses_.assign(m, 0);
    if (options_.prune_with_k4 && n_ >= 4) {
      const K4CrossingTable& table = k4_table();
      std::array<VertexId, 4> q{};
      for (q[0] = 1; q[0] <= n_; ++q[0])
        for (q[1] = q[0] + 1; q[1] <= n_; ++q[1])
          for (q[2] = q[1] + 1; q[2] <= n_; ++q[2])
            for (q[3] = q[2] + 1; q[3] <= n_; ++q[3]) {
              const K4Entry& entry = table[K4CrossingTable::index_of(rs_, q)];
              if (entry.outcome == K4Outcome::kUnrealizable) return false;
              if (entry.outcome != K4Outcome::kCrossing) continue;
              const Edge& e = entry.crossing.first;
              const Edge& f = entry.crossing.second;
              const int ei = edge_index(n_, q[e.a - 1], q[e.b - 1]);
              const int fi = edge_index(n_, q[f.a - 1], q[f.b - 1]);
              crosses_[ei] |= Mask{1} << fi;
              crosses_[fi] |= Mask{1} << ei;
            }
    }

    // The star of vertex 1 goes first so the map is connected from then on.
    for (int i = 0; i < m; ++i) order_.push_back(i);
    if (options_.prune_with_k4 && options_.order == EdgeOrder::kMostConstrainedFirst) {
      std::stable_sort(order_.begin() + (n_ - 1), order_.end(), [&](int x, int y) {
        return std::popcount(crosses_[x]) > std::popcount(crosses_[y]);
      });
    }
    Mask before = 0;
    for (int e : order_) {
      inserted_before_.push_back(before);
      before |= Mask{1} << e;
    }
    return true;
  }

  void run() { place(PlanarMap(n_), 0); }

  std::uint64_t explored() const { return explored_; }
  std::uint64_t visited() const { return visited_; }

 private:
  const RotationSystem& rs_;
  int n_;
  RealizeOptions options_;
  const std::function<bool(const RealizedDrawing&)>& visit_;

  std::vector<Edge> edges_;
  std::vector<Mask> crosses_;  // per edge id, edges it must cross
  std::vector<int> order_;
  std::vector<Mask> inserted_before_;
  std::uint64_t explored_ = 0;
  std::uint64_t visited_ = 0;
  bool stop_ = false;

  bool drawn(Mask inserted, VertexId a, VertexId b) const {
    return (inserted >> edge_index(n_, a, b)) & 1;
  }

  // Dart at u after which edge {u, v} must leave, or kNoDart if u is isolated.
  Dart corner(const PlanarMap& map, Mask inserted, VertexId u, VertexId v) const {
    VertexId w = rs_.predecessor(u, v);
    while (w != v && !drawn(inserted, u, w)) w = rs_.predecessor(u, w);
    if (w == v) return PlanarMap::kNoDart;
    return map.dart_toward(u, w);
  }

  void place(const PlanarMap& map, std::size_t k) {
    if (k == order_.size()) {
      finish(map);
      return;
    }
    const Mask inserted = inserted_before_[k];
    const Edge e = edges_[order_[k]];
    const Dart at_u = corner(map, inserted, e.a, e.b);
    const Dart at_v = corner(map, inserted, e.b, e.a);
    if (at_u == PlanarMap::kNoDart || at_v == PlanarMap::kNoDart) {
      // An isolated endpoint can sit in whichever face the other end opens
      // onto; only star edges of vertex 1 reach this branch.
      PlanarMap next = map;
      next.add_segment(PlanarMap::node_of(e.a), at_u, PlanarMap::node_of(e.b), at_v, e);
      place(next, k + 1);
      return;
    }
    route(map, k, PlanarMap::node_of(e.a), at_u, 0, at_v);
  }

  void route(const PlanarMap& map, std::size_t k, Node x, Dart from, Mask crossed, Dart target) {
    if (stop_) return;
    ++explored_;
    if (options_.node_limit && explored_ > options_.node_limit)
      throw SearchLimitExceeded(explored_, static_cast<int>(k));

    const int id = order_[k];
    const Edge e = edges_[id];
    const Mask must = options_.prune_with_k4 ? (crosses_[id] & inserted_before_[k]) : 0;
    const auto face = map.face_cycle(from);

    if ((!options_.prune_with_k4 || crossed == must) &&
        std::find(face.begin(), face.end(), target) != face.end()) {
      PlanarMap next = map;
      next.add_segment(x, from, PlanarMap::node_of(e.b), target, e);
      place(next, k + 1);
      if (stop_) return;
    }

    for (Dart b : face) {
      const Edge& f = map.edge_of(b);
      if (f.shares_endpoint(e)) continue;
      const Mask bit = Mask{1} << edge_index(n_, f.a, f.b);
      if (crossed & bit) continue;
      if (options_.prune_with_k4 && !(must & bit)) continue;
      PlanarMap next = map;
      const Dart beyond = next.split_segment(b, e);
      const Node crossing = next.origin(beyond);
      next.add_segment(x, from, crossing, beyond, e);
      route(next, k, crossing, PlanarMap::twin(b), crossed | bit, target);
      if (stop_) return;
    }
  }

  void finish(const PlanarMap& map) {
    if (map.euler_characteristic() != 2)
      throw std::logic_error("realizer produced a map violating Euler's formula");
    ++visited_;
    RealizedDrawing drawing{map, rs_};
    if (!visit_(drawing)) stop_ = true;
  }
};

}  // namespace

RealizeResult realize(const RotationSystem& rs, const RealizeOptions& options) {
  RealizeResult result;
  std::function<bool(const RealizedDrawing&)> keep_first = [&](const RealizedDrawing& d) {
    result.drawing = d;
    return false;
  };
  Search search(rs, options, keep_first);
  if (search.prepare()) search.run();
  result.explored = search.explored();
  return result;
}

std::uint64_t for_each_realization(const RotationSystem& rs,
                                   const std::function<bool(const RealizedDrawing&)>& visit,
                                   const RealizeOptions& options) {
  Search search(rs, options, visit);
  if (!search.prepare()) return 0;
  search.run();
  return search.visited();
}

}  // namespace goodkn
