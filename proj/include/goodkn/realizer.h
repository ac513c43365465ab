#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "goodkn/edges.h"
#include "goodkn/planar_map.h"
#include "goodkn/rotation_system.h"

namespace goodkn {

/// A good drawing of K_n given as its planarization.
struct RealizedDrawing {
  PlanarMap map;
  RotationSystem source;
};

enum class EdgeOrder {
  /// (min endpoint, max endpoint) lexicographic.
  kLexicographic,
  /// After the star of vertex 1, edges with the most forced crossings first.
  /// Only differs from kLexicographic when crossings are pruned.
  kMostConstrainedFirst,
};

struct RealizeOptions {
  /// Restrict every inserted edge to cross exactly the edges its K_4
  /// sub-systems say it crosses. Sound because the crossing pair of a good
  /// drawing of K_4 is fixed by its rotation system (checked exhaustively in
  /// the tests). When off, any non-adjacent edge may be crossed once.
  bool prune_with_k4 = true;
  EdgeOrder order = EdgeOrder::kLexicographic;
  /// Abort with SearchLimitExceeded after this many search nodes; 0 = none.
  std::uint64_t node_limit = 0;
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  SearchLimitExceeded(std::uint64_t explored, int frontier);
  std::uint64_t explored() const { return explored_; }
  /// Number of edges placed on the search path when the limit hit.
  int frontier() const { return frontier_; }

 private:
  std::uint64_t explored_;
  int frontier_;
};

struct RealizeResult {
  /// Empty means unrealizable: every insertion route was exhausted.
  std::optional<RealizedDrawing> drawing;
  std::uint64_t explored = 0;

  bool realizable() const { return drawing.has_value(); }
};

/// Largest n the realizer accepts (edge sets are 64-bit masks).
inline constexpr int kMaxRealizeVertices = 11;

/// Decides whether rs is the rotation system of a good drawing of K_n by
/// inserting the edges one at a time into a planar map, enumerating every
/// route through the faces, and backtracking. Deterministic given rs and
/// options.
RealizeResult realize(const RotationSystem& rs, const RealizeOptions& options = {});

/// Calls `visit` for every drawing the search reaches (one per complete set
/// of route choices; topologically equal drawings may repeat). Stops early
/// when `visit` returns false. Returns the number of drawings visited.
std::uint64_t for_each_realization(const RotationSystem& rs,
                                   const std::function<bool(const RealizedDrawing&)>& visit,
                                   const RealizeOptions& options = {});

}  // namespace goodkn
