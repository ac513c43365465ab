#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "goodkn/rotation_system.h"

namespace goodkn {

/// Totally ordered encoding of a rotation system: the normalized rotations
/// of vertices 1..n concatenated.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  CanonicalKey(int n, std::vector<std::uint8_t> data) : n_(n), data_(std::move(data)) {}

  static CanonicalKey of(const RotationSystem& rs);

  int size() const { return n_; }
  const std::vector<std::uint8_t>& data() const { return data_; }

  RotationSystem to_rotation_system() const;

  /// Text form: one block of base-36 digits per vertex, blocks joined by '/'.
  std::string to_string() const;
  static CanonicalKey parse(const std::string& text);

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Minimal key over every relabeling combined with optional reflection.
struct CanonicalForm {
  CanonicalKey key;
  /// relabeling[v-1] is the canonical label of v (applied after mirroring
  /// when `mirrored` is set).
  std::vector<VertexId> relabeling;
  bool mirrored = false;
  /// Number of (relabeling, reflection) pairs mapping the system onto its key.
  int automorphisms = 0;
  /// The system is isomorphic to its mirror image by a relabeling alone.
  bool achiral = false;
  /// Vertices that receive the last canonical label under some optimal
  /// labeling; these form one automorphism orbit.
  std::vector<VertexId> last_label_orbit;
};

/// Runs in O(n^3): only labelings whose vertex 1 has rotation 2..n can reach
/// the minimum, and there are 2 n (n-1) of those.
CanonicalForm canonical_form(const RotationSystem& rs);

/// Same minimum, restricted to relabelings (no reflection).
CanonicalKey chiral_canonical_key(const RotationSystem& rs);

bool weakly_isomorphic(const RotationSystem& a, const RotationSystem& b);

}  // namespace goodkn
