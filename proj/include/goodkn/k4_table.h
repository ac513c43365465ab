#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "goodkn/edges.h"
#include "goodkn/rotation_system.h"

namespace goodkn {

enum class K4Outcome { kUnrealizable, kPlanar, kCrossing };

struct K4Entry {
  K4Outcome outcome = K4Outcome::kUnrealizable;
  EdgePair crossing;  // local labels 1..4, meaningful for kCrossing

  friend bool operator==(const K4Entry&, const K4Entry&) = default;
};

/// What realize() says about each of the 16 rotation systems of K_4.
///
/// A K_4 system is indexed by one bit per vertex x: the bit is set when the
/// other three vertices, read counterclockwise from the smallest, are in
/// decreasing order.
class K4CrossingTable {
 public:
  static constexpr int kSize = 16;

  static int index_of(const RotationSystem& k4);
  /// Index of the sub-system induced on q[0] < q[1] < q[2] < q[3].
  static int index_of(const RotationSystem& rs, const std::array<VertexId, 4>& q);
  static RotationSystem system_at(int index);

  const K4Entry& operator[](int index) const { return entries_[index]; }
  K4Entry& operator[](int index) { return entries_[index]; }
  const K4Entry& lookup(const RotationSystem& k4) const { return entries_[index_of(k4)]; }

  bool realizable(int index) const { return entries_[index].outcome != K4Outcome::kUnrealizable; }

  void write(std::ostream& out) const;
  /// Throws std::runtime_error on malformed input.
  static K4CrossingTable read(std::istream& in);

  friend bool operator==(const K4CrossingTable&, const K4CrossingTable&) = default;

 private:
  std::array<K4Entry, kSize> entries_{};
};

/// Runs the exhaustive (unpruned) realizer on all 16 systems.
K4CrossingTable build_k4_table();

/// Process-wide table, built on first use. If the environment variable
/// GOODKN_K4_CACHE names a file, the table is loaded from it when present
/// and written to it otherwise.
const K4CrossingTable& k4_table();

/// Loads the table from `path` if it exists and parses; otherwise builds it
/// and writes it there.
K4CrossingTable load_or_build_k4_table(const std::string& path);

}  // namespace goodkn
