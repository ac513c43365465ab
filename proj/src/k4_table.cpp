#include "goodkn/k4_table.h"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "goodkn/realizer.h"

namespace goodkn {

namespace {

bool counterclockwise(int p1, int p2, int p3) {
  return (p1 < p2 && p2 < p3) || (p2 < p3 && p3 < p1) || (p3 < p1 && p1 < p2);
}

const char* outcome_name(K4Outcome o) {
  switch (o) {
    case K4Outcome::kUnrealizable: return "unrealizable";
    case K4Outcome::kPlanar: return "planar";
    case K4Outcome::kCrossing: return "crossing";
  }
  return "?";
}

}  // namespace

int K4CrossingTable::index_of(const RotationSystem& k4) {
  if (k4.size() != 4) throw std::invalid_argument("K4 table lookup needs a 4-vertex system");
  return index_of(k4, {1, 2, 3, 4});
}

int K4CrossingTable::index_of(const RotationSystem& rs, const std::array<VertexId, 4>& q) {
  int index = 0;
  for (int i = 0; i < 4; ++i) {
    const VertexId x = q[i];
    int p[3];
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) p[k++] = rs.position(x, q[j]);
    if (!counterclockwise(p[0], p[1], p[2])) index |= 1 << i;
  }
  return index;
}

RotationSystem K4CrossingTable::system_at(int index) {
  std::vector<std::vector<VertexId>> rot(4);
  for (VertexId x = 1; x <= 4; ++x) {
    std::vector<VertexId> others;
    for (VertexId y = 1; y <= 4; ++y)
      if (y != x) others.push_back(y);
    if (index & (1 << (x - 1))) std::swap(others[1], others[2]);
    rot[x - 1] = others;
  }
  return RotationSystem(rot);
}

void K4CrossingTable::write(std::ostream& out) const {
  out << "# K4 crossing table: index outcome [edge edge]\n";
  for (int i = 0; i < kSize; ++i) {
    const K4Entry& e = entries_[i];
    out << i << ' ' << outcome_name(e.outcome);
    if (e.outcome == K4Outcome::kCrossing)
      out << ' ' << e.crossing.first.to_string() << ' ' << e.crossing.second.to_string();
    out << '\n';
  }
}

K4CrossingTable K4CrossingTable::read(std::istream& in) {
  K4CrossingTable table;
  std::array<bool, kSize> seen{};
  std::string line;
  auto parse_edge = [](const std::string& s) {
    const auto dash = s.find('-');
    if (dash == std::string::npos) throw std::runtime_error("bad edge '" + s + "' in K4 table");
    return Edge(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int index = -1;
    std::string outcome;
    if (!(ls >> index >> outcome) || index < 0 || index >= kSize)
      throw std::runtime_error("bad K4 table line '" + line + "'");
    K4Entry& e = table.entries_[index];
    if (outcome == "unrealizable") {
      e.outcome = K4Outcome::kUnrealizable;
    } else if (outcome == "planar") {
      e.outcome = K4Outcome::kPlanar;
    } else if (outcome == "crossing") {
      std::string a, b;
      if (!(ls >> a >> b)) throw std::runtime_error("crossing entry without edges");
      e.outcome = K4Outcome::kCrossing;
      e.crossing = EdgePair(parse_edge(a), parse_edge(b));
    } else {
      throw std::runtime_error("unknown K4 outcome '" + outcome + "'");
    }
    seen[index] = true;
  }
  for (bool s : seen)
    if (!s) throw std::runtime_error("K4 table is incomplete");
  return table;
}

K4CrossingTable build_k4_table() {
  K4CrossingTable table;
  RealizeOptions exhaustive;
  exhaustive.prune_with_k4 = false;
  for (int i = 0; i < K4CrossingTable::kSize; ++i) {
    const RealizeResult r = realize(K4CrossingTable::system_at(i), exhaustive);
    K4Entry& e = table[i];
    if (!r.realizable()) {
      e.outcome = K4Outcome::kUnrealizable;
      continue;
    }
    const PlanarMap& map = r.drawing->map;
    if (map.crossing_count() == 0) {
      e.outcome = K4Outcome::kPlanar;
    } else {
      if (map.crossing_count() != 1)
        throw std::logic_error("good drawing of K4 with more than one crossing");
      const auto& info = map.node(map.original_count());
      e.outcome = K4Outcome::kCrossing;
      e.crossing = EdgePair(info.crossing_first, info.crossing_second);
    }
  }
  return table;
}

K4CrossingTable load_or_build_k4_table(const std::string& path) {
  if (std::ifstream in(path); in) {
    try {
      return K4CrossingTable::read(in);
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  K4CrossingTable table = build_k4_table();
  if (std::ofstream out(path); out) table.write(out);
  return table;
}

const K4CrossingTable& k4_table() {
  static const K4CrossingTable table = [] {
    if (const char* path = std::getenv("GOODKN_K4_CACHE"); path && *path)
      return load_or_build_k4_table(path);
    return build_k4_table();
  }();
  return table;
}

}  // namespace goodkn
