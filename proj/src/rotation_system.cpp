#include "goodkn/rotation_system.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace goodkn {

namespace {

std::string describe(const Violation& v) {
  if (v.vertex == 0) return v.reason;
  return v.reason + " at " + std::to_string(v.vertex);
}

std::optional<Violation> validate_flat(int n, std::span<const VertexId> flat) {
  if (n < 3) return Violation{0, "need at least 3 vertices, got " + std::to_string(n)};
  if (flat.size() != static_cast<std::size_t>(n) * (n - 1))
    return Violation{0, "wrong number of rotation entries"};
  std::vector<char> seen(n + 1);
  for (VertexId v = 1; v <= n; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int k = 0; k < n - 1; ++k) {
      const VertexId u = flat[static_cast<std::size_t>(v - 1) * (n - 1) + k];
      if (u < 1 || u > n) return Violation{v, "neighbor " + std::to_string(u) + " out of range"};
      if (u == v) return Violation{v, "self-reference"};
      if (seen[u]) return Violation{v, "duplicate neighbor " + std::to_string(u)};
      seen[u] = 1;
    }
  }
  return std::nullopt;
}

}  // namespace

InvalidRotationSystem::InvalidRotationSystem(const Violation& v)
    : std::invalid_argument(describe(v)), violation_(v) {}

std::optional<Violation> validate(const std::vector<std::vector<VertexId>>& rotations) {
  const int n = static_cast<int>(rotations.size());
  if (n < 3) return Violation{0, "need at least 3 vertices, got " + std::to_string(n)};
  for (VertexId v = 1; v <= n; ++v) {
    const auto& r = rotations[v - 1];
    std::vector<char> seen(n + 1);
    for (VertexId u : r) {
      if (u < 1 || u > n) return Violation{v, "neighbor " + std::to_string(u) + " out of range"};
      if (u == v) return Violation{v, "self-reference"};
      if (seen[u]) return Violation{v, "duplicate neighbor " + std::to_string(u)};
      seen[u] = 1;
    }
    for (VertexId u = 1; u <= n; ++u) {
      if (u != v && !seen[u])
        return Violation{v, "missing neighbor " + std::to_string(u)};
    }
  }
  return std::nullopt;
}

RotationSystem::RotationSystem(const std::vector<std::vector<VertexId>>& rotations) {
  if (auto bad = validate(rotations)) throw InvalidRotationSystem(*bad);
  const int n = static_cast<int>(rotations.size());
  std::vector<VertexId> flat;
  flat.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (const auto& r : rotations) flat.insert(flat.end(), r.begin(), r.end());
  *this = from_flat(n, std::move(flat));
}

RotationSystem RotationSystem::from_flat(int n, std::vector<VertexId> flat) {
  if (auto bad = validate_flat(n, flat)) throw InvalidRotationSystem(*bad);
  if (n > 127) throw std::invalid_argument("rotation systems are limited to 127 vertices");
  RotationSystem rs;
  rs.n_ = n;
  rs.rot_ = std::move(flat);
  rs.pos_.assign(static_cast<std::size_t>(n) * (n + 1), -1);
  for (VertexId v = 1; v <= n; ++v) {
    auto first = rs.rot_.begin() + static_cast<std::ptrdiff_t>(v - 1) * (n - 1);
    auto last = first + (n - 1);
    std::rotate(first, std::min_element(first, last), last);
    for (int k = 0; k < n - 1; ++k)
      rs.pos_[static_cast<std::size_t>(v - 1) * (n + 1) + first[k]] = static_cast<std::int8_t>(k);
  }
  return rs;
}

std::vector<std::vector<VertexId>> RotationSystem::rotations() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(n_);
  for (VertexId v = 1; v <= n_; ++v) {
    auto r = rotation(v);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

RotationSystem convex_rotation(int n) {
  if (n < 3) throw std::invalid_argument("convex_rotation needs n >= 3");
  std::vector<VertexId> flat;
  flat.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (VertexId i = 1; i <= n; ++i)
    for (int k = 1; k < n; ++k) flat.push_back((i - 1 + k) % n + 1);
  return RotationSystem::from_flat(n, std::move(flat));
}

RotationSystem relabel(const RotationSystem& rs, std::span<const VertexId> perm) {
  const int n = rs.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong size");
  std::vector<char> hit(n + 1);
  for (VertexId p : perm) {
    if (p < 1 || p > n || hit[p]) throw std::invalid_argument("relabeling is not a bijection");
    hit[p] = 1;
  }
  std::vector<VertexId> flat(static_cast<std::size_t>(n) * (n - 1));
  for (VertexId v = 1; v <= n; ++v) {
    const VertexId image = perm[v - 1];
    auto r = rs.rotation(v);
    for (int k = 0; k < n - 1; ++k)
      flat[static_cast<std::size_t>(image - 1) * (n - 1) + k] = perm[r[k] - 1];
  }
  return RotationSystem::from_flat(n, std::move(flat));
}

RotationSystem mirror(const RotationSystem& rs) {
  const int n = rs.size();
  std::vector<VertexId> flat;
  flat.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (VertexId v = 1; v <= n; ++v) {
    auto r = rs.rotation(v);
    flat.insert(flat.end(), r.rbegin(), r.rend());
  }
  return RotationSystem::from_flat(n, std::move(flat));
}

RotationSystem restrict(const RotationSystem& rs, std::span<const VertexId> subset) {
  const int n = rs.size();
  const int m = static_cast<int>(subset.size());
  if (m < 3) throw std::invalid_argument("restriction needs at least 3 vertices");
  std::vector<VertexId> local(n + 1, 0);
  std::vector<VertexId> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i) {
    const VertexId v = sorted[i];
    if (v < 1 || v > n || local[v] != 0)
      throw std::invalid_argument("restriction subset has an invalid or repeated vertex");
    local[v] = i + 1;
  }
  std::vector<VertexId> flat;
  flat.reserve(static_cast<std::size_t>(m) * (m - 1));
  for (VertexId v : sorted)
    for (VertexId u : rs.rotation(v))
      if (local[u] != 0) flat.push_back(local[u]);
  return RotationSystem::from_flat(m, std::move(flat));
}

RotationSystem delete_vertex(const RotationSystem& rs, VertexId v) {
  std::vector<VertexId> keep;
  keep.reserve(rs.size() - 1);
  for (VertexId u = 1; u <= rs.size(); ++u)
    if (u != v) keep.push_back(u);
  return restrict(rs, keep);
}

// ---- .rot text format ------------------------------------------------------

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_blank_or_comment(const std::string& line) {
  auto it = std::find_if(line.begin(), line.end(), [](unsigned char c) { return !std::isspace(c); });
  return it == line.end() || *it == '#';
}

int parse_int(const std::string& token, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

RotationSystem parse_rotation_system(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<VertexId>> rotations;
  std::vector<int> defined;  // line of each vertex's rotation, 0 if absent
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string token, extra;
      ls >> token;
      n = parse_int(token, line_no);
      if (ls >> extra) throw ParseError(line_no, "trailing text after vertex count");
      if (n < 3) throw ParseError(line_no, "vertex count must be at least 3");
      if (n > 127) throw ParseError(line_no, "vertex count too large");
      rotations.assign(n, {});
      defined.assign(n + 1, 0);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'i: neighbors...'");
    std::string head = line.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }),
               head.end());
    const VertexId v = parse_int(head, line_no);
    if (v < 1 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    if (defined[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " defined twice");
    defined[v] = line_no;
    std::istringstream rest(line.substr(colon + 1));
    std::string token;
    while (rest >> token) rotations[v - 1].push_back(parse_int(token, line_no));
    const auto listed = rotations[v - 1].size();
    if (static_cast<int>(listed) != n - 1)
      throw ParseError(line_no, "vertex " + std::to_string(v) + " lists " + std::to_string(listed) +
                                    " neighbors, expected " + std::to_string(n - 1));
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  for (VertexId v = 1; v <= n; ++v)
    if (!defined[v]) throw ParseError(line_no, "rotation of vertex " + std::to_string(v) + " missing");
  if (auto bad = validate(rotations))
    throw ParseError(bad->vertex ? defined[bad->vertex] : line_no, describe(*bad));
  return RotationSystem(rotations);
}

RotationSystem parse_rotation_system(const std::string& text) {
  std::istringstream in(text);
  return parse_rotation_system(in);
}

RotationSystem read_rotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_rotation_system(in);
}

void write_rotation_system(std::ostream& out, const RotationSystem& rs) {
  out << rs.size() << '\n';
  for (VertexId v = 1; v <= rs.size(); ++v) {
    out << v << ':';
    for (VertexId u : rs.rotation(v)) out << ' ' << u;
    out << '\n';
  }
}

std::string format_rotation_system(const RotationSystem& rs) {
  std::ostringstream out;
  write_rotation_system(out, rs);
  return out.str();
}

}  // namespace goodkn
