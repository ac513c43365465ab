#include "goodkn/census.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <iomanip>
#include <sstream>

#include "goodkn/k4_table.h"
#include "goodkn/k5_table.h"
#include "goodkn/triangles.h"
#include "parallel.h"

namespace goodkn {

// ---- records ---------------------------------------------------------------

CensusRecord make_record(const RotationSystem& rs) {
  const RealizeResult realized = realize(rs);
  if (!realized.realizable()) throw std::invalid_argument("census record of an unrealizable system");
  const TriangleCensus tri = analyze_triangles(rs);
  CensusRecord r;
  r.n = rs.size();
  r.key = canonical_form(rs).key;
  r.empty = tri.empty;
  for (const VertexStats& s : tri.stats) {
    r.t.push_back(s.t);
    r.l.push_back(s.l);
    r.lucky += s.lucky;
  }
  r.crossings = realized.drawing->map.crossing_count();
  return r;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

std::string format_record(const CensusRecord& r) {
  std::ostringstream out;
  out << "n=" << r.n << " key=" << r.key.to_string() << " empty=" << r.empty << " t=" << join(r.t)
      << " l=" << join(r.l) << " lucky=" << r.lucky << " crossings=" << r.crossings;
  return out.str();
}

CensusRecord parse_record(const std::string& line) {
  CensusRecord r;
  std::istringstream in(line);
  std::string field;
  int seen = 0;
  try {
    while (in >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw std::runtime_error("field without '='");
      const std::string name = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (name == "n") r.n = std::stoi(value), seen |= 1;
      else if (name == "key") r.key = CanonicalKey::parse(value), seen |= 2;
      else if (name == "empty") r.empty = std::stoi(value), seen |= 4;
      else if (name == "t") r.t = split_ints(value), seen |= 8;
      else if (name == "l") r.l = split_ints(value), seen |= 16;
      else if (name == "lucky") r.lucky = std::stoi(value), seen |= 32;
      else if (name == "crossings") r.crossings = std::stoi(value), seen |= 64;
      else throw std::runtime_error("unknown field '" + name + "'");
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("bad census record: ") + e.what());
  }
  if (seen != 127) throw std::runtime_error("census record is missing fields: '" + line + "'");
  if (r.key.size() != r.n || static_cast<int>(r.t.size()) != r.n || static_cast<int>(r.l.size()) != r.n)
    throw std::runtime_error("census record fields disagree on n: '" + line + "'");
  return r;
}

// ---- extension -------------------------------------------------------------

Frontier initial_frontier() {
  Frontier f;
  f.n = 3;
  f.classes.push_back(canonical_form(convex_rotation(3)).key);
  return f;
}

namespace {

bool counterclockwise(int p1, int p2, int p3) {
  return (p1 < p2 && p2 < p3) || (p2 < p3 && p3 < p1) || (p3 < p1 && p1 < p2);
}

// Enumerates every way to add vertex n+1 to a parent on n vertices: a cyclic
// order around the new vertex and one insertion gap in each old rotation.
// Vertices are decided one at a time so each 4-set {a, b, k, new} is checked
// against the K_4 table as soon as it is fully determined.
class Extender {
 public:
  Extender(const RotationSystem& parent, const RealizeOptions& realize_options, ExtendStats& stats)
      : parent_(parent),
        n_(parent.size()),
        table_(k4_table()),
        k5_(k5_table()),
        realize_(realize_options),
        stats_(stats),
        gap_(n_ + 1),
        wpos_(n_ + 1) {}

  std::vector<CanonicalKey> run() {
    descend(1);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  const RotationSystem& parent_;
  int n_;
  const K4CrossingTable& table_;
  const K5Table& k5_;
  const RealizeOptions& realize_;
  ExtendStats& stats_;
  std::vector<int> gap_;         // new vertex goes after index gap_[x] of rot(x)
  std::vector<VertexId> wrot_;   // partial rotation of the new vertex
  std::vector<int> wpos_;
  std::vector<CanonicalKey> found_;

  // Position of y around x with the new vertex inserted, doubled so the new
  // vertex fits between two old entries.
  int slot(VertexId x, VertexId y) const { return 2 * parent_.position(x, y); }
  int new_slot(VertexId x) const { return 2 * gap_[x] + 1; }

  bool quadruple_ok(VertexId a, VertexId b, VertexId k) const {
    int index = 0;
    if (!counterclockwise(slot(a, b), slot(a, k), new_slot(a))) index |= 1;
    if (!counterclockwise(slot(b, a), slot(b, k), new_slot(b))) index |= 2;
    if (!counterclockwise(slot(k, a), slot(k, b), new_slot(k))) index |= 4;
    if (!counterclockwise(wpos_[a], wpos_[b], wpos_[k])) index |= 8;
    return table_.realizable(index);
  }

  // Sub-systems of a good drawing are good, so every 5-set must also be a
  // realizable K_5 system.
  bool quintuple_ok(VertexId a, VertexId b, VertexId c, VertexId k) const {
    const std::array<VertexId, 4> old{a, b, c, k};
    int index = 0;
    int scale = 1;
    for (int i = 0; i < 4; ++i, scale *= 6) {
      std::array<int, 4> p{};
      int j = 0;
      for (VertexId y : old)
        if (y != old[i]) p[j++] = slot(old[i], y);
      p[3] = new_slot(old[i]);
      index += scale * K5Table::digit(p);
    }
    index += scale * K5Table::digit({wpos_[a], wpos_[b], wpos_[c], wpos_[k]});
    return k5_.realizable(index);
  }

  bool level_ok(VertexId k) const {
    for (VertexId a = 1; a < k; ++a)
      for (VertexId b = a + 1; b < k; ++b)
        if (!quadruple_ok(a, b, k)) return false;
    for (VertexId a = 1; a < k; ++a)
      for (VertexId b = a + 1; b < k; ++b)
        for (VertexId c = b + 1; c < k; ++c)
          if (!quintuple_ok(a, b, c, k)) return false;
    return true;
  }

  void descend(VertexId k) {
    if (k > n_) {
      leaf();
      return;
    }
    const int choices = k <= 2 ? 1 : k - 1;
    for (int c = 0; c < choices; ++c) {
      // Insert k after index c of the new vertex's partial rotation.
      wrot_.insert(wrot_.begin() + (k <= 2 ? static_cast<int>(wrot_.size()) : c + 1), k);
      for (std::size_t i = 0; i < wrot_.size(); ++i) wpos_[wrot_[i]] = static_cast<int>(i);
      for (int g = 0; g < n_ - 1; ++g) {
        gap_[k] = g;
        if (level_ok(k)) descend(k + 1);
      }
      wrot_.erase(std::find(wrot_.begin(), wrot_.end(), k));
      for (std::size_t i = 0; i < wrot_.size(); ++i) wpos_[wrot_[i]] = static_cast<int>(i);
    }
  }

  void leaf() {
    ++stats_.candidates;
    const int w = n_ + 1;
    std::vector<VertexId> flat;
    flat.reserve(static_cast<std::size_t>(w) * n_);
    for (VertexId x = 1; x <= n_; ++x) {
      auto r = parent_.rotation(x);
      for (int i = 0; i < n_ - 1; ++i) {
        flat.push_back(r[i]);
        if (i == gap_[x]) flat.push_back(w);
      }
    }
    flat.insert(flat.end(), wrot_.begin(), wrot_.end());
    const RotationSystem candidate = RotationSystem::from_flat(w, std::move(flat));

    CanonicalForm form = canonical_form(candidate);
    const auto& orbit = form.last_label_orbit;
    if (std::find(orbit.begin(), orbit.end(), w) == orbit.end()) return;
    ++stats_.accepted;
    if (!realize(candidate, realize_).realizable()) return;
    ++stats_.realizable;
    found_.push_back(std::move(form.key));
  }
};

}  // namespace

std::vector<CanonicalKey> extend_parent(const RotationSystem& parent, const RealizeOptions& realize,
                                        ExtendStats* stats) {
  ExtendStats local;
  Extender ext(parent, realize, stats ? *stats : local);
  return ext.run();
}

bool extend(Frontier& frontier, const ExtendOptions& options, ExtendStats* stats) {
  const std::size_t total = frontier.classes.size();
  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  std::size_t budget = options.max_parents ? options.max_parents : total;
  while (frontier.cursor < total) {
    if (budget == 0) return false;
    const std::size_t begin = frontier.cursor;
    const std::size_t end = std::min({total, begin + batch, begin + budget});
    std::vector<std::vector<CanonicalKey>> children(end - begin);
    std::vector<ExtendStats> per_worker(std::max(1, options.workers));
    detail::parallel_for(end - begin, options.workers, [&](std::size_t i, int worker) {
      const RotationSystem parent = frontier.classes[begin + i].to_rotation_system();
      children[i] = extend_parent(parent, options.realize, &per_worker[worker]);
    });
    if (stats)
      for (const ExtendStats& s : per_worker) {
        stats->candidates += s.candidates;
        stats->accepted += s.accepted;
        stats->realizable += s.realizable;
      }
    const auto old_size = static_cast<std::ptrdiff_t>(frontier.partial.size());
    for (auto& c : children)
      for (auto& key : c) frontier.partial.push_back(std::move(key));
    std::sort(frontier.partial.begin() + old_size, frontier.partial.end());
    std::inplace_merge(frontier.partial.begin(), frontier.partial.begin() + old_size, frontier.partial.end());
    if (std::adjacent_find(frontier.partial.begin(), frontier.partial.end()) != frontier.partial.end())
      throw std::logic_error("two parents produced the same class");
    frontier.cursor = end;
    budget -= end - begin;
    if (options.on_checkpoint) options.on_checkpoint(frontier);
  }
  Frontier next;
  next.n = frontier.n + 1;
  next.classes = std::move(frontier.partial);
  frontier = std::move(next);
  return true;
}

Census enumerate(int n, const EnumerateOptions& options) {
  if (n < 3) throw std::invalid_argument("enumerate needs n >= 3");
  Frontier f = initial_frontier();
  if (options.resume && !options.checkpoint_path.empty()) {
    if (std::ifstream probe(options.checkpoint_path); probe) f = load_snapshot(options.checkpoint_path);
    if (f.n > n) throw std::invalid_argument("checkpoint is already past the requested level");
  }
  Census census;
  census.n = n;
  ExtendOptions ext = options.extend;
  const bool limited = ext.max_parents != 0;
  std::size_t budget = ext.max_parents;
  const auto user_checkpoint = ext.on_checkpoint;
  ext.on_checkpoint = [&](const Frontier& fr) {
    if (!options.checkpoint_path.empty()) save_snapshot(options.checkpoint_path, fr);
    if (user_checkpoint) user_checkpoint(fr);
  };
  while (f.n < n) {
    if (limited && budget == 0) break;
    const std::size_t remaining = f.classes.size() - f.cursor;
    ext.max_parents = budget;
    if (!extend(f, ext, &census.stats)) break;
    if (limited) budget -= std::min(budget, remaining);
    if (!options.checkpoint_path.empty()) save_snapshot(options.checkpoint_path, f);
  }
  census.complete = f.n == n;
  if (census.complete) census.classes = f.classes;
  census.frontier = std::move(f);
  return census;
}

std::vector<CensusRecord> census_records(const std::vector<CanonicalKey>& classes, int workers) {
  std::vector<CensusRecord> out(classes.size());
  detail::parallel_for(classes.size(), workers,
               [&](std::size_t i, int) { out[i] = make_record(classes[i].to_rotation_system()); });
  return out;
}

void add_to_summary(CensusSummary& s, const CensusRecord& r) {
  if (s.classes == 0) {
    s.n = r.n;
    s.min_empty = r.empty;
    s.max_empty = r.empty;
  }
  if (r.n != s.n) throw std::invalid_argument("records from different levels");
  std::uint64_t factorial = 1;
  for (int i = 2; i <= s.n; ++i) factorial *= static_cast<std::uint64_t>(i);
  const CanonicalForm form = canonical_form(r.key.to_rotation_system());
  ++s.classes;
  s.chiral_classes += form.achiral ? 1 : 2;
  // automorphisms counts relabelings with and without reflection.
  s.labeled += 2 * factorial / static_cast<std::uint64_t>(form.automorphisms);
  s.min_empty = std::min(s.min_empty, r.empty);
  s.max_empty = std::max(s.max_empty, r.empty);
  if (r.lucky == 0) ++s.lucky_free;
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
  CensusSummary s;
  for (const CensusRecord& r : records) add_to_summary(s, r);
  return s;
}

// ---- snapshots -------------------------------------------------------------

namespace {

constexpr const char* kSnapshotMagic = "goodkn-census-snapshot 1";

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string snapshot_body(const Frontier& f) {
  std::ostringstream out;
  out << kSnapshotMagic << '\n' << "level " << f.n << '\n' << "cursor " << f.cursor << '\n';
  out << "classes " << f.classes.size() << '\n';
  for (const CanonicalKey& k : f.classes) out << k.to_string() << '\n';
  out << "partial " << f.partial.size() << '\n';
  for (const CanonicalKey& k : f.partial) out << k.to_string() << '\n';
  return out.str();
}

}  // namespace

std::string snapshot_text(const Frontier& f) {
  std::string body = snapshot_body(f);
  return body + "sha256 " + sha256_hex(body) + '\n';
}

void write_snapshot(std::ostream& out, const Frontier& f) { out << snapshot_text(f); }

Frontier read_snapshot(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto tail = text.rfind("sha256 ");
  if (tail == std::string::npos || (tail != 0 && text[tail - 1] != '\n'))
    throw CorruptSnapshot("snapshot has no checksum line");
  const std::string body = text.substr(0, tail);
  std::string stored = text.substr(tail + 7);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != sha256_hex(body)) throw CorruptSnapshot("snapshot checksum mismatch");

  std::istringstream lines(body);
  std::string line;
  if (!std::getline(lines, line) || line != kSnapshotMagic) throw CorruptSnapshot("not a census snapshot");
  auto header = [&](const char* name) -> std::size_t {
    std::string word;
    long long value = -1;
    if (!std::getline(lines, line)) throw CorruptSnapshot(std::string("missing ") + name);
    std::istringstream ls(line);
    if (!(ls >> word >> value) || word != name || value < 0)
      throw CorruptSnapshot(std::string("bad ") + name + " line");
    return static_cast<std::size_t>(value);
  };
  auto keys = [&](std::size_t count, int n, std::vector<CanonicalKey>& out) {
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(lines, line)) throw CorruptSnapshot("snapshot is truncated");
      try {
        out.push_back(CanonicalKey::parse(line));
      } catch (const std::exception& e) {
        throw CorruptSnapshot(std::string("bad key in snapshot: ") + e.what());
      }
      if (out.back().size() != n) throw CorruptSnapshot("key of the wrong size in snapshot");
      if (i && !(out[i - 1] < out[i])) throw CorruptSnapshot("snapshot keys are not sorted");
    }
  };
  Frontier f;
  f.n = static_cast<int>(header("level"));
  if (f.n < 3) throw CorruptSnapshot("bad level");
  f.cursor = header("cursor");
  keys(header("classes"), f.n, f.classes);
  keys(header("partial"), f.n + 1, f.partial);
  if (f.cursor > f.classes.size()) throw CorruptSnapshot("cursor past the end of the level");
  if (std::getline(lines, line)) throw CorruptSnapshot("trailing data in snapshot");
  return f;
}

void save_snapshot(const std::string& path, const Frontier& f) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    write_snapshot(out, f);
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot replace " + path);
}

Frontier load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_snapshot(in);
}

}  // namespace goodkn
