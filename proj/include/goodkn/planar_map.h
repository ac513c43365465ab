#pragma once

#include <string>
#include <vector>

#include "goodkn/edges.h"

namespace goodkn {

/// Combinatorial map on the sphere whose vertices are the original vertices
/// of K_n plus crossing points, and whose edges are pieces ("segments") of
/// original edges.
///
/// Darts come in pairs: the twin of dart d is d ^ 1. `rot_next` is the
/// counterclockwise successor around the dart's origin. The face to the left
/// of d continues with face_next(d) = rot_prev(twin(d)), and the angular
/// corner between d and rot_next(d) belongs to that same face.
class PlanarMap {
 public:
  using Dart = int;
  using Node = int;
  static constexpr Dart kNoDart = -1;

  struct NodeInfo {
    VertexId original = 0;  // 0 for crossings
    Edge crossing_first;    // crossings only
    Edge crossing_second;
    Dart first_dart = kNoDart;
  };

  /// n isolated original vertices; node v-1 is vertex v.
  explicit PlanarMap(int n = 0);

  int original_count() const { return n_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int segment_count() const { return dart_count() / 2; }
  int crossing_count() const { return node_count() - n_; }

  static Dart twin(Dart d) { return d ^ 1; }
  Node origin(Dart d) const { return origin_[d]; }
  Node target(Dart d) const { return origin_[twin(d)]; }
  Dart rot_next(Dart d) const { return rot_next_[d]; }
  Dart rot_prev(Dart d) const { return rot_prev_[d]; }
  Dart face_next(Dart d) const { return rot_prev_[twin(d)]; }
  const Edge& edge_of(Dart d) const { return edge_[d]; }

  const NodeInfo& node(Node x) const { return nodes_[x]; }
  static Node node_of(VertexId v) { return v - 1; }
  bool is_crossing(Node x) const { return x >= n_; }
  int degree(Node x) const;

  /// Darts leaving x in counterclockwise order, starting at first_dart.
  std::vector<Dart> darts_around(Node x) const;

  /// Dart leaving original vertex `at` along the first segment of edge
  /// {at, toward}; kNoDart if that edge has not been drawn.
  Dart dart_toward(VertexId at, VertexId toward) const;

  /// New segment from x to y belonging to `edge`. Its dart at x is placed in
  /// the corner following `corner_x` (kNoDart when x is isolated); likewise
  /// at y. Returns the dart leaving x.
  Dart add_segment(Node x, Dart corner_x, Node y, Dart corner_y, const Edge& edge);

  /// Subdivides the segment of dart d (p -> q) with a new crossing node
  /// between edge_of(d) and `crosser`. Afterwards d runs p -> X and the
  /// returned dart runs X -> q.
  Dart split_segment(Dart d, const Edge& crosser);

  // Low-level construction for readers: add nodes and segments first, then
  // fix the rotation at every node. check_invariants() validates the result.
  Node add_crossing_node(const Edge& first, const Edge& second);
  /// Segment x -> y whose darts are not yet linked into any rotation.
  Dart add_detached_segment(Node x, Node y, const Edge& edge);
  /// Sets the counterclockwise order of the darts leaving x.
  void set_rotation(Node x, const std::vector<Dart>& ccw);

  /// Face index of every dart (face to its left), faces numbered by their
  /// smallest dart.
  std::vector<int> face_of_darts(int* face_count = nullptr) const;
  int face_count() const;

  /// Darts of the face left of d, in boundary order starting at d.
  std::vector<Dart> face_cycle(Dart d) const;

  /// V - E + F for the map (2 for a connected map on the sphere).
  int euler_characteristic() const;

  /// Structural invariants: twin involution, rotations are permutations of
  /// the darts at each node, crossings have degree 4 with alternating edges.
  bool check_invariants(std::string* why = nullptr) const;

 private:
  int n_ = 0;
  std::vector<NodeInfo> nodes_;
  std::vector<Node> origin_;
  std::vector<Dart> rot_next_;
  std::vector<Dart> rot_prev_;
  std::vector<Edge> edge_;

  Dart new_dart_pair();
  void link_after(Dart corner, Dart d, Node at);
};

}  // namespace goodkn
