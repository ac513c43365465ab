#include "goodkn/claims.h"

#include <stdexcept>

#include "goodkn/crossings.h"
#include "goodkn/drawing.h"
#include "goodkn/realizer.h"
#include "goodkn/triangles.h"
#include "parallel.h"

namespace goodkn {

namespace {

struct ClaimInfo {
  Claim claim;
  const char* name;
  int min_n;
  int max_n;
};

constexpr ClaimInfo kClaims[] = {
    {Claim::kTheoremN, "THEOREM_N", 4, 1000},
    {Claim::kObs2n4, "OBS_2N4", 4, 8},
    {Claim::kCorTwoStar, "COR_TWO_STAR", 4, 1000},
    {Claim::kPropLonely3, "PROP_LONELY3", 4, 1000},
    {Claim::kProp1Iff, "PROP1_IFF", 4, 1000},
    {Claim::kDeletionIdentity, "DELETION_IDENTITY", 5, 1000},
    {Claim::kNoLuckyUnique, "NO_LUCKY_UNIQUE", 4, 8},
};

const ClaimInfo& info(Claim c) {
  for (const ClaimInfo& i : kClaims)
    if (i.claim == c) return i;
  throw std::logic_error("unknown claim");
}

std::string tri(const Triangle& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

RealizedDrawing drawing_of(const RotationSystem& rs) {
  RealizeResult r = realize(rs);
  if (!r.realizable()) throw std::invalid_argument("claim checked on an unrealizable system");
  return std::move(*r.drawing);
}

}  // namespace

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    for (const ClaimInfo& i : kClaims) out.push_back(i.claim);
    return out;
  }();
  return claims;
}

std::string claim_name(Claim c) { return info(c).name; }

std::optional<Claim> parse_claim(const std::string& name) {
  for (const ClaimInfo& i : kClaims)
    if (name == i.name) return i.claim;
  return std::nullopt;
}

int claim_min_n(Claim c) { return info(c).min_n; }
int claim_max_n(Claim c) { return info(c).max_n; }

std::uint64_t expected_lucky_free(int n) { return n == 8 ? 1 : 0; }

std::optional<std::string> check_class(Claim c, const RotationSystem& rs) {
  const int n = rs.size();
  switch (c) {
    case Claim::kTheoremN: {
      const int empty = count_empty_triangles(rs);
      if (empty < n) return std::to_string(empty) + " empty triangles";
      return std::nullopt;
    }
    case Claim::kObs2n4: {
      const int empty = count_empty_triangles(rs);
      if (empty < 2 * n - 4) return std::to_string(empty) + " empty triangles";
      return std::nullopt;
    }
    case Claim::kCorTwoStar: {
      // Star triangles are read off the drawing; emptiness from the rotations.
      const RealizedDrawing d = drawing_of(rs);
      for (VertexId v = 1; v <= n; ++v) {
        int count = 0;
        for (VertexId u = 1; u <= n; ++u)
          for (VertexId w = u + 1; w <= n; ++w) {
            if (u == v || w == v) continue;
            const Triangle t(v, u, w);
            if (is_star_triangle(d, t, v) && is_empty(rs, t)) ++count;
          }
        if (count < 2) return "vertex " + std::to_string(v) + " has " + std::to_string(count) + " empty star triangles";
      }
      return std::nullopt;
    }
    case Claim::kPropLonely3: {
      for (VertexId v = 1; v <= n; ++v) {
        const VertexStats s = vertex_stats(rs, v);
        if (s.l >= 1 && s.t < 3)
          return "vertex " + std::to_string(v) + " has l=" + std::to_string(s.l) + " t=" + std::to_string(s.t);
      }
      return std::nullopt;
    }
    case Claim::kProp1Iff: {
      const RealizedDrawing d = drawing_of(rs);
      const auto crossings = crossing_pairs(rs);
      for (VertexId v = 1; v <= n; ++v) {
        std::vector<Triangle> found;
        for (VertexId u = 1; u <= n; ++u)
          for (VertexId w = u + 1; w <= n; ++w) {
            if (u == v || w == v) continue;
            const Triangle t(v, u, w);
            if (!is_star_triangle(d, t, v)) continue;
            const bool adjacent = rs.successor(v, u) == w || rs.successor(v, w) == u;
            if (is_empty(rs, t) != adjacent)
              return "star triangle " + tri(t) + " at " + std::to_string(v) +
                     (adjacent ? " is consecutive but not empty" : " is empty but not consecutive");
            if (adjacent) found.push_back(t);
          }
        if (found != empty_star_triangles(rs, v, crossings))
          return "empty star triangles at " + std::to_string(v) + " disagree with the rotation-based list";
      }
      return std::nullopt;
    }
    case Claim::kDeletionIdentity: {
      const TriangleCensus census = analyze_triangles(rs);
      for (VertexId v = 1; v <= n; ++v) {
        const VertexStats& s = census.stats[v - 1];
        const int smaller = count_empty_triangles(delete_vertex(rs, v));
        if (smaller != census.empty - s.t + s.l)
          return "deleting " + std::to_string(v) + " leaves " + std::to_string(smaller) + " empty triangles, expected " +
                 std::to_string(census.empty - s.t + s.l);
      }
      return std::nullopt;
    }
    case Claim::kNoLuckyUnique:
      break;
  }
  throw std::invalid_argument("NO_LUCKY_UNIQUE is a census-wide claim");
}

ClaimReport verify_claim(Claim c, int n, const std::vector<CanonicalKey>& classes, int workers) {
  if (n < claim_min_n(c) || n > claim_max_n(c))
    throw std::invalid_argument(claim_name(c) + " is stated for " + std::to_string(claim_min_n(c)) +
                                " <= n <= " + std::to_string(claim_max_n(c)));
  ClaimReport report;
  report.claim = c;
  report.n = n;
  report.classes = classes.size();

  // Per-class outcome; the first failure in key order is reported so the
  // result does not depend on scheduling.
  std::vector<std::optional<std::string>> outcome(classes.size());
  auto work = [&](std::size_t i) {
    const RotationSystem rs = classes[i].to_rotation_system();
    if (rs.size() != n) throw std::invalid_argument("census class of the wrong size");
    if (c == Claim::kNoLuckyUnique) {
      bool lucky = false;
      for (VertexId v = 1; v <= n && !lucky; ++v) lucky = vertex_stats(rs, v).lucky;
      if (!lucky) outcome[i] = "no lucky vertex";
    } else {
      outcome[i] = check_class(c, rs);
    }
  };
  detail::parallel_for(classes.size(), workers, [&](std::size_t i, int) { work(i); });

  if (c == Claim::kNoLuckyUnique) {
    std::uint64_t lucky_free = 0;
    std::string first;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (outcome[i]) {
        if (!lucky_free) first = classes[i].to_string();
        ++lucky_free;
      }
    const std::uint64_t expected = expected_lucky_free(n);
    if (lucky_free != expected) {
      report.failures = 1;
      report.detail = std::to_string(lucky_free) + " classes without a lucky vertex, expected " +
                              std::to_string(expected) + (first.empty() ? "" : "; first " + first);
    } else if (lucky_free) {
      report.detail = "lucky-free class " + first;
    }
    return report;
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (outcome[i]) {
      if (!report.failures) report.detail = classes[i].to_string() + ": " + *outcome[i];
      ++report.failures;
    }
  return report;
}

}  // namespace goodkn
