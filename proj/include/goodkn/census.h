#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "goodkn/canonical.h"
#include "goodkn/realizer.h"
#include "goodkn/rotation_system.h"

namespace goodkn {

/// Statistics of one weak-isomorphism class of realizable rotation systems.
struct CensusRecord {
  int n = 0;
  CanonicalKey key;
  int empty = 0;
  std::vector<int> t;
  std::vector<int> l;
  int lucky = 0;
  int crossings = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Analytics of a realizable system (throws std::invalid_argument if it is
/// not realizable). The key is the canonical key of rs.
CensusRecord make_record(const RotationSystem& rs);

/// "n=5 key=2345/... empty=6 t=3,3,... l=... lucky=3 crossings=1"
std::string format_record(const CensusRecord& r);
/// Throws std::runtime_error on malformed lines.
CensusRecord parse_record(const std::string& line);

/// Canonical classes at level n plus the progress of extending them to n+1.
struct Frontier {
  int n = 0;
  std::vector<CanonicalKey> classes;  // strictly increasing
  std::size_t cursor = 0;             // parents already extended
  std::vector<CanonicalKey> partial;  // classes at n+1 found so far, sorted

  friend bool operator==(const Frontier&, const Frontier&) = default;
};

/// The single class of K_3.
Frontier initial_frontier();

struct ExtendOptions {
  int workers = 1;
  /// Parents processed between checkpoints; independent of `workers` so
  /// snapshots do not depend on the worker count.
  std::size_t batch = 32;
  /// Stop (resumably) after this many parents in this call; 0 = no limit.
  std::size_t max_parents = 0;
  RealizeOptions realize;
  /// Called after every batch with the updated frontier.
  std::function<void(const Frontier&)> on_checkpoint;
};

struct ExtendStats {
  std::uint64_t candidates = 0;   // complete extensions passing the K_4 and K_5 filters
  std::uint64_t accepted = 0;     // new vertex is a canonical deletion choice
  std::uint64_t realizable = 0;   // of those, realizable
};

/// Realizable classes at n+1 that extend `parent` (which must be the
/// canonical representative of its class) with the new vertex n+1 in the
/// orbit of the canonical deletion vertex. Sorted, duplicate-free.
std::vector<CanonicalKey> extend_parent(const RotationSystem& parent, const RealizeOptions& realize,
                                        ExtendStats* stats = nullptr);

/// Continues extending `frontier` from its cursor. Returns true when all
/// parents are done; then `frontier` becomes the complete level n+1.
bool extend(Frontier& frontier, const ExtendOptions& options = {}, ExtendStats* stats = nullptr);

struct EnumerateOptions {
  ExtendOptions extend;
  /// Snapshot written after every batch and every completed level.
  std::string checkpoint_path;
  /// Continue from checkpoint_path if it exists.
  bool resume = false;
};

/// Outcome of enumerate(): complete classes at n, or an interrupted run.
struct Census {
  int n = 0;
  bool complete = false;
  std::vector<CanonicalKey> classes;
  Frontier frontier;  // state to resume from when incomplete
  ExtendStats stats;
};

/// Iterates extend() from K_3 up to n. Throws std::invalid_argument for
/// n < 3.
Census enumerate(int n, const EnumerateOptions& options = {});

/// Analytics of every class, in key order (parallel over `workers`).
std::vector<CensusRecord> census_records(const std::vector<CanonicalKey>& classes, int workers = 1);

struct CensusSummary {
  int n = 0;
  std::uint64_t classes = 0;          // up to relabeling and reflection
  std::uint64_t chiral_classes = 0;   // up to relabeling only
  std::uint64_t labeled = 0;          // labeled realizable rotation systems
  int min_empty = 0;
  int max_empty = 0;
  std::uint64_t lucky_free = 0;       // classes without a lucky vertex
};
CensusSummary summarize(const std::vector<CensusRecord>& records);
/// Folds one more record into a running summary.
void add_to_summary(CensusSummary& s, const CensusRecord& r);

// ---- snapshots -------------------------------------------------------------

class CorruptSnapshot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_snapshot(std::ostream& out, const Frontier& f);
std::string snapshot_text(const Frontier& f);
/// Verifies the format header and content hash; throws CorruptSnapshot.
Frontier read_snapshot(std::istream& in);
void save_snapshot(const std::string& path, const Frontier& f);
Frontier load_snapshot(const std::string& path);

}  // namespace goodkn
