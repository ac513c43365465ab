#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goodkn/canonical.h"
#include "goodkn/rotation_system.h"

namespace goodkn {

enum class Claim {
  kTheoremN,          // at least n empty triangles
  kObs2n4,            // at least 2n - 4 empty triangles
  kCorTwoStar,        // every vertex has two empty star triangles
  kPropLonely3,       // a lonely vertex is on at least three empty triangles
  kProp1Iff,          // a star triangle is empty iff its base is consecutive at the apex
  kDeletionIdentity,  // empty(K_n - v) = empty(K_n) - t(v) + l(v)
  kNoLuckyUnique,     // the number of classes without a lucky vertex
};

const std::vector<Claim>& all_claims();
std::string claim_name(Claim c);  // "THEOREM_N", ...
std::optional<Claim> parse_claim(const std::string& name);

/// Smallest n at which the claim is stated; NO_LUCKY_UNIQUE is also bounded
/// above by 8.
int claim_min_n(Claim c);
int claim_max_n(Claim c);

struct ClaimReport {
  Claim claim{};
  int n = 0;
  std::uint64_t classes = 0;
  std::uint64_t failures = 0;
  std::string detail;  // first failing class and why, or a note
  bool pass() const { return failures == 0; }
};

/// Checks one class; returns a description of the failure, if any.
/// NO_LUCKY_UNIQUE is a property of the whole census and is not handled
/// here (use verify_claim).
std::optional<std::string> check_class(Claim c, const RotationSystem& rs);

/// Checks the claim over all classes of a complete census at level n.
/// Throws std::invalid_argument when n is outside the claim's range.
ClaimReport verify_claim(Claim c, int n, const std::vector<CanonicalKey>& classes, int workers = 1);

/// Lucky-free classes expected at level n: one at n = 8, none below.
std::uint64_t expected_lucky_free(int n);

}  // namespace goodkn
