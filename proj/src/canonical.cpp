#include "goodkn/canonical.h"

#include <algorithm>
#include <stdexcept>

namespace goodkn {

namespace {

char digit(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

int undigit(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw std::invalid_argument(std::string("bad key digit '") + c + "'");
}

struct Search {
  const RotationSystem& rs;
  int n;
  int m;  // rotation length
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cand;
  std::vector<VertexId> label;      // label[v]
  std::vector<VertexId> unlabel;    // unlabel[l]
  std::vector<VertexId> best_label;
  bool have_best = false;
  bool best_mirrored = false;
  int ties = 0;
  bool achiral = false;
  std::vector<char> last;

  explicit Search(const RotationSystem& r)
      : rs(r), n(r.size()), m(r.size() - 1),
        best(static_cast<std::size_t>(n) * m), cand(best.size()),
        label(n + 1), unlabel(n + 1), best_label(n + 1), last(n + 1) {}

  // Labels a as 1 and its rotation from index `start` in direction `dir` as 2..n,
  // then compares the relabeled system against the best so far.
  void try_labeling(VertexId a, int start, int dir) {
    auto ra = rs.rotation(a);
    label[a] = 1;
    unlabel[1] = a;
    for (int k = 0; k < m; ++k) {
      const VertexId x = ra[((start + dir * k) % m + m) % m];
      label[x] = k + 2;
      unlabel[k + 2] = x;
    }
    // Block for label 1 is always 2..n.
    for (int k = 0; k < m; ++k) cand[k] = static_cast<std::uint8_t>(k + 2);
    int cmp = have_best ? 0 : -1;
    for (int l = 2; l <= n; ++l) {
      const VertexId x = unlabel[l];
      auto rx = rs.rotation(x);
      const int pa = rs.position(x, a);
      std::uint8_t* block = cand.data() + static_cast<std::size_t>(l - 1) * m;
      for (int k = 0; k < m; ++k) {
        block[k] = static_cast<std::uint8_t>(label[rx[((pa + dir * k) % m + m) % m]]);
        if (cmp == 0) {
          const std::uint8_t b = best[static_cast<std::size_t>(l - 1) * m + k];
          if (block[k] > b) return;
          if (block[k] < b) cmp = -1;
        }
      }
    }
    if (cmp < 0) {
      best.swap(cand);
      best_label = label;
      best_mirrored = dir < 0;
      have_best = true;
      ties = 1;
      achiral = false;
      std::fill(last.begin(), last.end(), 0);
      last[unlabel[n]] = 1;
    } else {
      ++ties;
      if ((dir < 0) != best_mirrored) achiral = true;
      last[unlabel[n]] = 1;
    }
  }
};

}  // namespace

CanonicalKey CanonicalKey::of(const RotationSystem& rs) {
  std::vector<std::uint8_t> data;
  data.reserve(static_cast<std::size_t>(rs.size()) * (rs.size() - 1));
  for (VertexId v = 1; v <= rs.size(); ++v)
    for (VertexId u : rs.rotation(v)) data.push_back(static_cast<std::uint8_t>(u));
  return {rs.size(), std::move(data)};
}

RotationSystem CanonicalKey::to_rotation_system() const {
  return RotationSystem::from_flat(n_, std::vector<VertexId>(data_.begin(), data_.end()));
}

std::string CanonicalKey::to_string() const {
  std::string out;
  out.reserve(data_.size() + n_);
  const int m = n_ - 1;
  for (int v = 0; v < n_; ++v) {
    if (v) out += '/';
    for (int k = 0; k < m; ++k) out += digit(data_[static_cast<std::size_t>(v) * m + k]);
  }
  return out;
}

CanonicalKey CanonicalKey::parse(const std::string& text) {
  std::vector<std::uint8_t> data;
  int blocks = 1;
  for (char c : text) {
    if (c == '/') {
      ++blocks;
      continue;
    }
    data.push_back(static_cast<std::uint8_t>(undigit(c)));
  }
  if (blocks < 3 || data.size() != static_cast<std::size_t>(blocks) * (blocks - 1))
    throw std::invalid_argument("malformed canonical key '" + text + "'");
  CanonicalKey key(blocks, std::move(data));
  key.to_rotation_system();  // validates
  return key;
}

CanonicalForm canonical_form(const RotationSystem& rs) {
  Search s(rs);
  const int n = rs.size();
  for (VertexId a = 1; a <= n; ++a)
    for (int start = 0; start < n - 1; ++start) {
      s.try_labeling(a, start, +1);
      s.try_labeling(a, start, -1);
    }
  CanonicalForm out;
  out.key = CanonicalKey(n, std::move(s.best));
  out.relabeling.assign(s.best_label.begin() + 1, s.best_label.end());
  out.mirrored = s.best_mirrored;
  out.automorphisms = s.ties;
  out.achiral = s.achiral;
  for (VertexId v = 1; v <= n; ++v)
    if (s.last[v]) out.last_label_orbit.push_back(v);
  return out;
}

CanonicalKey chiral_canonical_key(const RotationSystem& rs) {
  Search s(rs);
  const int n = rs.size();
  for (VertexId a = 1; a <= n; ++a)
    for (int start = 0; start < n - 1; ++start) s.try_labeling(a, start, +1);
  return CanonicalKey(n, std::move(s.best));
}

bool weakly_isomorphic(const RotationSystem& a, const RotationSystem& b) {
  return a.size() == b.size() && canonical_form(a).key == canonical_form(b).key;
}

}  // namespace goodkn
