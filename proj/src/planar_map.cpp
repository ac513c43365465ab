#include "goodkn/planar_map.h"

#include <algorithm>

namespace goodkn {

PlanarMap::PlanarMap(int n) : n_(n), nodes_(n) {
  for (VertexId v = 1; v <= n; ++v) nodes_[v - 1].original = v;
}

int PlanarMap::degree(Node x) const {
  const Dart first = nodes_[x].first_dart;
  if (first == kNoDart) return 0;
  int deg = 0;
  Dart d = first;
  do {
    ++deg;
    d = rot_next_[d];
  } while (d != first);
  return deg;
}

std::vector<PlanarMap::Dart> PlanarMap::darts_around(Node x) const {
  std::vector<Dart> out;
  const Dart first = nodes_[x].first_dart;
  if (first == kNoDart) return out;
  Dart d = first;
  do {
    out.push_back(d);
    d = rot_next_[d];
  } while (d != first);
  return out;
}

PlanarMap::Dart PlanarMap::dart_toward(VertexId at, VertexId toward) const {
  const Edge e(at, toward);
  const Dart first = nodes_[node_of(at)].first_dart;
  if (first == kNoDart) return kNoDart;
  Dart d = first;
  do {
    if (edge_[d] == e) return d;
    d = rot_next_[d];
  } while (d != first);
  return kNoDart;
}

PlanarMap::Dart PlanarMap::new_dart_pair() {
  const Dart d = dart_count();
  origin_.resize(d + 2);
  rot_next_.resize(d + 2);
  rot_prev_.resize(d + 2);
  edge_.resize(d + 2);
  return d;
}

void PlanarMap::link_after(Dart corner, Dart d, Node at) {
  origin_[d] = at;
  if (corner == kNoDart) {
    rot_next_[d] = d;
    rot_prev_[d] = d;
    nodes_[at].first_dart = d;
    return;
  }
  const Dart after = rot_next_[corner];
  rot_next_[corner] = d;
  rot_prev_[d] = corner;
  rot_next_[d] = after;
  rot_prev_[after] = d;
}

PlanarMap::Dart PlanarMap::add_segment(Node x, Dart corner_x, Node y, Dart corner_y, const Edge& edge) {
  const Dart d = new_dart_pair();
  edge_[d] = edge;
  edge_[twin(d)] = edge;
  link_after(corner_x, d, x);
  link_after(corner_y, twin(d), y);
  return d;
}

PlanarMap::Node PlanarMap::add_crossing_node(const Edge& first, const Edge& second) {
  NodeInfo info;
  info.crossing_first = first;
  info.crossing_second = second;
  nodes_.push_back(info);
  return node_count() - 1;
}

PlanarMap::Dart PlanarMap::add_detached_segment(Node x, Node y, const Edge& edge) {
  const Dart d = new_dart_pair();
  edge_[d] = edge;
  edge_[twin(d)] = edge;
  origin_[d] = x;
  origin_[twin(d)] = y;
  rot_next_[d] = rot_prev_[d] = d;
  rot_next_[twin(d)] = rot_prev_[twin(d)] = twin(d);
  return d;
}

void PlanarMap::set_rotation(Node x, const std::vector<Dart>& ccw) {
  if (ccw.empty()) {
    nodes_[x].first_dart = kNoDart;
    return;
  }
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Dart d = ccw[i];
    const Dart next = ccw[(i + 1) % ccw.size()];
    rot_next_[d] = next;
    rot_prev_[next] = d;
  }
  nodes_[x].first_dart = ccw.front();
}

PlanarMap::Dart PlanarMap::split_segment(Dart d, const Edge& crosser) {
  const Dart back = twin(d);  // q -> p, becomes X -> p
  const Node q = origin_[back];
  const Node x = node_count();
  NodeInfo info;
  info.crossing_first = std::min(edge_[d], crosser);
  info.crossing_second = std::max(edge_[d], crosser);
  nodes_.push_back(info);

  const Dart c = new_dart_pair();  // c: X -> q, twin(c): q -> X
  const Dart cq = twin(c);
  edge_[c] = edge_[d];
  edge_[cq] = edge_[d];

  // twin(c) takes the place of `back` in the rotation at q.
  origin_[cq] = q;
  if (rot_next_[back] == back) {
    rot_next_[cq] = cq;
    rot_prev_[cq] = cq;
  } else {
    rot_next_[cq] = rot_next_[back];
    rot_prev_[cq] = rot_prev_[back];
    rot_prev_[rot_next_[back]] = cq;
    rot_next_[rot_prev_[back]] = cq;
  }
  if (nodes_[q].first_dart == back) nodes_[q].first_dart = cq;

  origin_[back] = x;
  origin_[c] = x;
  rot_next_[back] = c;
  rot_prev_[back] = c;
  rot_next_[c] = back;
  rot_prev_[c] = back;
  nodes_[x].first_dart = back;
  return c;
}

std::vector<int> PlanarMap::face_of_darts(int* face_count) const {
  std::vector<int> face(dart_count(), -1);
  int faces = 0;
  for (Dart start = 0; start < dart_count(); ++start) {
    if (face[start] != -1) continue;
    Dart d = start;
    do {
      face[d] = faces;
      d = face_next(d);
    } while (d != start);
    ++faces;
  }
  if (face_count) *face_count = faces;
  return face;
}

int PlanarMap::face_count() const {
  int faces = 0;
  face_of_darts(&faces);
  return faces;
}

std::vector<PlanarMap::Dart> PlanarMap::face_cycle(Dart start) const {
  std::vector<Dart> out;
  Dart d = start;
  do {
    out.push_back(d);
    d = face_next(d);
  } while (d != start);
  return out;
}

int PlanarMap::euler_characteristic() const {
  // An isolated vertex still sits inside a face; count the sphere's single
  // face when there are no segments at all.
  const int faces = segment_count() == 0 ? 1 : face_count();
  return node_count() - segment_count() + faces;
}

bool PlanarMap::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<char> seen(dart_count(), 0);
  for (Node x = 0; x < node_count(); ++x) {
    const Dart first = nodes_[x].first_dart;
    if (first == kNoDart) {
      if (is_crossing(x)) return fail("crossing without darts");
      continue;
    }
    Dart d = first;
    int guard = 0;
    do {
      if (origin_[d] != x) return fail("dart origin mismatch at node " + std::to_string(x));
      if (seen[d]) return fail("dart appears twice in rotations");
      seen[d] = 1;
      if (rot_prev_[rot_next_[d]] != d) return fail("rotation links inconsistent");
      d = rot_next_[d];
      if (++guard > dart_count()) return fail("rotation cycle does not close");
    } while (d != first);
    if (is_crossing(x)) {
      const auto around = darts_around(x);
      if (around.size() != 4) return fail("crossing of degree " + std::to_string(around.size()));
      const NodeInfo& info = nodes_[x];
      for (int k = 0; k < 4; ++k) {
        const Edge& e = edge_[around[k]];
        if (e != edge_[around[(k + 2) % 4]]) return fail("crossing edges do not alternate");
        if (e != info.crossing_first && e != info.crossing_second)
          return fail("crossing records the wrong edges");
      }
      if (edge_[around[0]] == edge_[around[1]]) return fail("crossing edges do not alternate");
    }
  }
  for (Dart d = 0; d < dart_count(); ++d) {
    if (!seen[d]) return fail("dart missing from rotations");
    if (edge_[d] != edge_[twin(d)]) return fail("twin darts on different edges");
  }
  return true;
}

}  // namespace goodkn
