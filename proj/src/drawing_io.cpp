#include "goodkn/drawing_io.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "goodkn/drawing.h"

namespace goodkn {

namespace {

// Original vertex reached by walking straight from d through crossings.
VertexId heads_toward(const PlanarMap& map, PlanarMap::Dart d) {
  while (map.is_crossing(map.target(d))) d = map.rot_next(map.rot_next(PlanarMap::twin(d)));
  return map.node(map.target(d)).original;
}

Edge parse_edge(const std::string& s, int line, int n) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) throw ParseError(line, "bad edge '" + s + "'");
  int a = 0, b = 0;
  try {
    std::size_t used = 0;
    a = std::stoi(s.substr(0, dash), &used);
    if (used != dash) throw std::invalid_argument(s);
    b = std::stoi(s.substr(dash + 1), &used);
    if (used != s.size() - dash - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ParseError(line, "bad edge '" + s + "'");
  }
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw ParseError(line, "bad edge '" + s + "'");
  return Edge(a, b);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

void write_drawing(std::ostream& out, const RealizedDrawing& d) {
  const PlanarMap& map = d.map;
  const int n = d.source.size();
  write_rotation_system(out, d.source);
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) {
      const Edge e(a, b);
      out << "edge " << e.to_string() << ':';
      for (const Edge& f : crossings_along(map, e)) out << ' ' << f.to_string();
      out << '\n';
    }
  std::vector<std::pair<EdgePair, std::vector<VertexId>>> crossings;
  for (PlanarMap::Node x = map.original_count(); x < map.node_count(); ++x) {
    std::vector<VertexId> ends;
    for (PlanarMap::Dart dart : map.darts_around(x)) ends.push_back(heads_toward(map, dart));
    std::rotate(ends.begin(), std::min_element(ends.begin(), ends.end()), ends.end());
    const auto& info = map.node(x);
    crossings.emplace_back(EdgePair(info.crossing_first, info.crossing_second), ends);
  }
  std::sort(crossings.begin(), crossings.end());
  for (const auto& [pair, ends] : crossings) {
    out << "crossing " << pair.first.to_string() << ' ' << pair.second.to_string() << ':';
    for (VertexId v : ends) out << ' ' << v;
    out << '\n';
  }
}

std::string format_drawing(const RealizedDrawing& d) {
  std::ostringstream out;
  write_drawing(out, d);
  return out.str();
}

RealizedDrawing read_drawing(std::istream& in) {
  // Split the rotation part from the edge and crossing lines, keeping line
  // numbers intact for error messages.
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::string rot_text;
  std::vector<int> extra;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    const auto w = words(lines[i]);
    const bool ours = !w.empty() && (w[0] == "edge" || w[0] == "crossing");
    rot_text += ours ? "#\n" : lines[i] + '\n';
    if (ours) extra.push_back(i);
  }
  RotationSystem rs = parse_rotation_system(rot_text);
  const int n = rs.size();
  if (n > kMaxRealizeVertices) throw ParseError(1, "drawing has too many vertices");

  std::map<Edge, std::vector<Edge>> along;
  std::map<EdgePair, std::pair<std::vector<VertexId>, int>> local;
  for (int i : extra) {
    const int line_no = i + 1;
    const auto colon = lines[i].find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "missing ':'");
    const auto head = words(lines[i].substr(0, colon));
    const auto tail = words(lines[i].substr(colon + 1));
    if (head[0] == "edge") {
      if (head.size() != 2) throw ParseError(line_no, "expected 'edge a-b:'");
      const Edge e = parse_edge(head[1], line_no, n);
      if (along.count(e)) throw ParseError(line_no, "edge " + e.to_string() + " listed twice");
      std::vector<Edge>& list = along[e];
      for (const auto& w : tail) {
        const Edge f = parse_edge(w, line_no, n);
        if (f.shares_endpoint(e)) throw ParseError(line_no, "adjacent edges cannot cross");
        if (std::find(list.begin(), list.end(), f) != list.end())
          throw ParseError(line_no, "edge " + f.to_string() + " crossed twice");
        list.push_back(f);
      }
    } else {
      if (head.size() != 3) throw ParseError(line_no, "expected 'crossing a-b c-d:'");
      const EdgePair pair(parse_edge(head[1], line_no, n), parse_edge(head[2], line_no, n));
      if (local.count(pair)) throw ParseError(line_no, "crossing listed twice");
      std::vector<VertexId> ends;
      for (const auto& w : tail) {
        try {
          ends.push_back(std::stoi(w));
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad vertex '" + w + "'");
        }
      }
      if (ends.size() != 4) throw ParseError(line_no, "a crossing needs four endpoints");
      local[pair] = {ends, line_no};
    }
  }
  if (static_cast<int>(along.size()) != edge_count(n)) throw ParseError(static_cast<int>(lines.size()), "missing edge lines");

  // One crossing node per listed pair, in sorted order.
  RealizedDrawing d{PlanarMap(n), rs};
  PlanarMap& map = d.map;
  std::map<EdgePair, PlanarMap::Node> node_of_pair;
  for (const auto& [pair, data] : local) {
    const auto& lst1 = along[pair.first];
    const auto& lst2 = along[pair.second];
    if (std::find(lst1.begin(), lst1.end(), pair.second) == lst1.end() ||
        std::find(lst2.begin(), lst2.end(), pair.first) == lst2.end())
      throw ParseError(data.second, "crossing not listed on its edges");
    node_of_pair[pair] = map.add_crossing_node(pair.first, pair.second);
  }

  // Segments along every edge; first[e] / last[e] are the end darts and
  // at[e][x] the darts leaving crossing node x toward e.a and e.b.
  std::map<Edge, PlanarMap::Dart> from_a, from_b;
  std::map<std::pair<Edge, PlanarMap::Node>, std::pair<PlanarMap::Dart, PlanarMap::Dart>> at;
  for (const auto& [e, list] : along) {
    std::vector<PlanarMap::Node> chain{PlanarMap::node_of(e.a)};
    for (const Edge& f : list) {
      const auto it = node_of_pair.find(EdgePair(e, f));
      if (it == node_of_pair.end())
        throw ParseError(0, "crossing of " + e.to_string() + " and " + f.to_string() + " has no crossing line");
      chain.push_back(it->second);
    }
    chain.push_back(PlanarMap::node_of(e.b));
    std::vector<PlanarMap::Dart> segs;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) segs.push_back(map.add_detached_segment(chain[i], chain[i + 1], e));
    from_a[e] = segs.front();
    from_b[e] = PlanarMap::twin(segs.back());
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) at[{e, chain[i]}] = {PlanarMap::twin(segs[i - 1]), segs[i]};
  }
  for (VertexId v = 1; v <= n; ++v) {
    std::vector<PlanarMap::Dart> ccw;
    for (VertexId u : rs.rotation(v)) {
      const Edge e(v, u);
      ccw.push_back(v == e.a ? from_a[e] : from_b[e]);
    }
    map.set_rotation(PlanarMap::node_of(v), ccw);
  }
  for (const auto& [pair, data] : local) {
    const PlanarMap::Node x = node_of_pair[pair];
    std::vector<PlanarMap::Dart> ccw;
    for (VertexId p : data.first) {
      const Edge& e = pair.first.incident_to(p) ? pair.first : pair.second;
      if (!e.incident_to(p)) throw ParseError(data.second, "endpoint " + std::to_string(p) + " is not on the crossing edges");
      const auto& ends = at[{e, x}];
      ccw.push_back(p == e.a ? ends.first : ends.second);
    }
    std::vector<PlanarMap::Dart> sorted = ccw;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(data.second, "repeated endpoint at crossing");
    map.set_rotation(x, ccw);
  }
  std::string why;
  if (!map.check_invariants(&why)) throw ParseError(0, "inconsistent drawing: " + why);
  if (map.euler_characteristic() != 2) throw ParseError(0, "inconsistent drawing: not a connected map on the sphere");
  if (!satisfies_good_drawing_axioms(d, &why)) throw ParseError(0, "not a good drawing: " + why);
  return d;
}

RealizedDrawing parse_drawing(const std::string& text) {
  std::istringstream in(text);
  return read_drawing(in);
}

}  // namespace goodkn
