#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodkn {

/// 1-based vertex label.
using VertexId = int;

/// Reason a list of rotations does not describe a rotation system of K_n.
struct Violation {
  VertexId vertex = 0;  // 0 when the problem is global (e.g. n < 3)
  std::string reason;
};

class InvalidRotationSystem : public std::invalid_argument {
 public:
  explicit InvalidRotationSystem(const Violation& v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Checks that rotations[v-1] is a permutation of all vertices except v and
/// that there are at least three vertices. Reports the first offending vertex.
std::optional<Violation> validate(const std::vector<std::vector<VertexId>>& rotations);

/// A rotation system of the complete graph K_n: for every vertex the cyclic
/// order of its n-1 neighbours, read counterclockwise. Cyclic sequences are
/// kept in normalized phase (smallest neighbour first), so two systems are
/// equal iff they describe the same cyclic orders.
class RotationSystem {
 public:
  RotationSystem() = default;

  /// Throws InvalidRotationSystem when validate() fails.
  explicit RotationSystem(const std::vector<std::vector<VertexId>>& rotations);

  /// Same as the list constructor, from n blocks of n-1 labels laid out
  /// back to back.
  static RotationSystem from_flat(int n, std::vector<VertexId> flat);

  int size() const { return n_; }

  std::span<const VertexId> rotation(VertexId v) const {
    return {rot_.data() + static_cast<std::size_t>(v - 1) * (n_ - 1),
            static_cast<std::size_t>(n_ - 1)};
  }

  /// Index of u in the normalized rotation of v.
  int position(VertexId v, VertexId u) const {
    return pos_[static_cast<std::size_t>(v - 1) * (n_ + 1) + u];
  }

  /// Neighbour following u counterclockwise around v.
  VertexId successor(VertexId v, VertexId u) const {
    const int p = position(v, u) + 1;
    return rotation(v)[p == n_ - 1 ? 0 : p];
  }

  VertexId predecessor(VertexId v, VertexId u) const {
    const int p = position(v, u);
    return rotation(v)[p == 0 ? n_ - 2 : p - 1];
  }

  std::vector<std::vector<VertexId>> rotations() const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
  friend std::strong_ordering operator<=>(const RotationSystem& a, const RotationSystem& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rot_ <=> b.rot_;
  }

 private:
  int n_ = 0;
  std::vector<VertexId> rot_;  // n blocks of n-1 labels, normalized phase
  std::vector<std::int8_t> pos_;  // n blocks of n+1 entries; -1 for self and slot 0
};

/// n points in convex position labeled counterclockwise along the hull:
/// the rotation at i is i+1, i+2, ..., i+n-1 (mod n).
RotationSystem convex_rotation(int n);

/// perm[v-1] is the new label of v. Throws std::invalid_argument if perm is
/// not a bijection on [1, n].
RotationSystem relabel(const RotationSystem& rs, std::span<const VertexId> perm);

/// Reflection of the sphere: every rotation reversed.
RotationSystem mirror(const RotationSystem& rs);

/// Sub-system on the sorted vertex set `subset`, relabeled 1..|subset| in
/// increasing order. Throws std::invalid_argument if |subset| < 3 or a
/// label is out of range or repeated.
RotationSystem restrict(const RotationSystem& rs, std::span<const VertexId> subset);

/// Deletes one vertex; labels above it shift down by one.
RotationSystem delete_vertex(const RotationSystem& rs, VertexId v);

// ---- .rot text format ------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the .rot format: first non-comment line is n, followed by n lines
/// "i: p1 p2 ... p_{n-1}". Lines starting with '#' are comments.
RotationSystem parse_rotation_system(std::istream& in);
RotationSystem parse_rotation_system(const std::string& text);
RotationSystem read_rotation_file(const std::string& path);

void write_rotation_system(std::ostream& out, const RotationSystem& rs);
std::string format_rotation_system(const RotationSystem& rs);

}  // namespace goodkn
