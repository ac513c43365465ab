#include <doctest.h>

#include <random>
#include <set>

#include "goodkn/canonical.h"
#include "goodkn/crossings.h"
#include "goodkn/drawing.h"
#include "goodkn/k4_table.h"
#include "goodkn/realizer.h"
#include "test_util.h"

using namespace goodkn;

namespace {

RealizeOptions unpruned() {
  RealizeOptions o;
  o.prune_with_k4 = false;
  return o;
}

void check_drawing(const RealizedDrawing& d) {
  std::string why;
  CHECK_MESSAGE(d.map.check_invariants(&why), why);
  CHECK_MESSAGE(satisfies_good_drawing_axioms(d, &why), why);
  CHECK(d.map.euler_characteristic() == 2);
  CHECK(extract_rotation(d) == d.source);
}

}  // namespace

TEST_CASE("convex systems realize with C(n,4) crossings") {
  const int expected[] = {0, 0, 0, 0, 1, 5, 15, 35, 70};
  for (int n = 3; n <= 8; ++n) {
    const RealizeResult r = realize(convex_rotation(n));
    REQUIRE(r.realizable());
    CHECK(r.drawing->map.crossing_count() == expected[n]);
    check_drawing(*r.drawing);
  }
}

TEST_CASE("planar K4 realizes without crossings") {
  const RealizeResult r = realize(test::planar_k4());
  REQUIRE(r.realizable());
  CHECK(r.drawing->map.crossing_count() == 0);
  CHECK(r.drawing->map.face_count() == 4);
  check_drawing(*r.drawing);
}

TEST_CASE("K4: realizable systems are exactly the convex and planar classes") {
  // By hand: a good drawing of K4 is either plane (the planar map of K4 with
  // 2 * 4! / 24 = 2 labeled rotation systems) or has one crossing between
  // two disjoint edges (2 * 4! / 8 = 6 labeled systems). So 8 of 16.
  const std::set<CanonicalKey> classes{canonical_form(convex_rotation(4)).key, canonical_form(test::planar_k4()).key};
  int realizable = 0;
  test::for_each_rotation_system(4, [&](const RotationSystem& rs) {
    const bool ok = realize(rs, unpruned()).realizable();
    CHECK(ok == (classes.count(canonical_form(rs).key) == 1));
    realizable += ok;
  });
  CHECK(realizable == 8);
  CHECK(realizable < 16);
}

TEST_CASE("every good drawing of a K4 system has the same crossings") {
  // This is what makes pruning by the K4 table sound.
  for (int i = 0; i < K4CrossingTable::kSize; ++i) {
    const RotationSystem rs = K4CrossingTable::system_at(i);
    std::set<std::vector<EdgePair>> patterns;
    const auto count = for_each_realization(
        rs,
        [&](const RealizedDrawing& d) {
          check_drawing(d);
          patterns.insert(crossing_set(d));
          return true;
        },
        unpruned());
    CAPTURE(i);
    CHECK(patterns.size() == (count ? 1u : 0u));
  }
}

TEST_CASE("pruned and exhaustive search agree on every K5 system") {
  int realizable = 0;
  int checked = 0;
  test::for_each_rotation_system(5, [&](const RotationSystem& rs) {
    const RealizeResult pruned = realize(rs);
    const RealizeResult full = realize(rs, unpruned());
    CHECK(pruned.realizable() == full.realizable());
    if (pruned.realizable()) {
      ++realizable;
      CHECK(crossing_set(*pruned.drawing) == crossing_set(*full.drawing));
    }
    ++checked;
  });
  CHECK(checked == 7776);
  CHECK(realizable == 414);
}

TEST_CASE("edge order does not change the answer") {
  RealizeOptions other;
  other.order = EdgeOrder::kMostConstrainedFirst;
  std::mt19937 rng(31);
  int realizable = 0;
  for (int i = 0; i < 300; ++i) {
    const RotationSystem rs = test::random_rotation_system(5 + i % 2, rng);
    const bool a = realize(rs).realizable();
    CHECK(a == realize(rs, other).realizable());
    realizable += a;
  }
  for (int n = 4; n <= 8; ++n) CHECK(realize(convex_rotation(n), other).realizable());
  CHECK(realizable > 0);
}

TEST_CASE("mirror images realize together with mirrored crossings") {
  std::mt19937 rng(32);
  for (int i = 0; i < 300; ++i) {
    const RotationSystem rs = test::random_rotation_system(5, rng);
    const RealizeResult a = realize(rs);
    const RealizeResult b = realize(mirror(rs));
    REQUIRE(a.realizable() == b.realizable());
    if (a.realizable()) CHECK(crossing_set(*a.drawing) == crossing_set(*b.drawing));
  }
}

TEST_CASE("search limit aborts with the frontier size") {
  RealizeOptions limited;
  limited.node_limit = 3;
  try {
    realize(convex_rotation(8), limited);
    FAIL("expected SearchLimitExceeded");
  } catch (const SearchLimitExceeded& e) {
    CHECK(e.explored() >= 3);
    CHECK(e.frontier() >= 0);
  }
}

TEST_CASE("unrealizable K4 witness") {
  const RotationSystem bad({{2, 3, 4}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}});
  CHECK_FALSE(realize(bad).realizable());
  CHECK_FALSE(realize(bad, unpruned()).realizable());
  CHECK_FALSE(k4_consistent(bad));
}

TEST_CASE("too many vertices") {
  CHECK_THROWS_AS(realize(convex_rotation(kMaxRealizeVertices + 1)), std::invalid_argument);
}
