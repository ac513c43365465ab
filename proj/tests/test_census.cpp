#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "goodkn/census.h"
#include "goodkn/triangles.h"
#include "test_util.h"

using namespace goodkn;

namespace {

std::set<CanonicalKey> brute_force_classes(int n, std::uint64_t* labeled = nullptr) {
  std::set<CanonicalKey> keys;
  std::uint64_t count = 0;
  test::for_each_rotation_system(n, [&](const RotationSystem& rs) {
    if (!realize(rs).realizable()) return;
    ++count;
    keys.insert(canonical_form(rs).key);
  });
  if (labeled) *labeled = count;
  return keys;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("K4 classes from the K3 frontier match direct exhaustion") {
  const auto direct = brute_force_classes(4);
  Frontier f = initial_frontier();
  CHECK(f.n == 3);
  CHECK(f.classes.size() == 1);
  REQUIRE(extend(f));
  CHECK(f.n == 4);
  CHECK(std::set<CanonicalKey>(f.classes.begin(), f.classes.end()) == direct);
  CHECK(f.classes.size() == 2);
}

TEST_CASE("K5 census matches exhaustive generation") {
  std::uint64_t labeled = 0;
  const auto direct = brute_force_classes(5, &labeled);
  const Census c = enumerate(5);
  REQUIRE(c.complete);
  CHECK(std::set<CanonicalKey>(c.classes.begin(), c.classes.end()) == direct);
  CHECK(c.classes.size() == 5);
  const CensusSummary s = summarize(census_records(c.classes));
  CHECK(s.labeled == labeled);
  CHECK(s.labeled == 414);
}

TEST_CASE("class counts up to n = 6") {
  const std::size_t expected[] = {0, 0, 0, 1, 2, 5, 102};
  Frontier f = initial_frontier();
  while (f.n < 6) {
    REQUIRE(extend(f));
    CHECK(f.classes.size() == expected[f.n]);
    CHECK(std::is_sorted(f.classes.begin(), f.classes.end()));
    CHECK(std::adjacent_find(f.classes.begin(), f.classes.end()) == f.classes.end());
  }
}

TEST_CASE("labeled counts at n = 4 and 6") {
  CHECK(summarize(census_records(enumerate(4).classes)).labeled == 8);
  const CensusSummary s6 = summarize(census_records(enumerate(6).classes));
  CHECK(s6.classes == 102);
  CHECK(s6.chiral_classes >= s6.classes);
  CHECK(s6.chiral_classes <= 2 * s6.classes);
}

TEST_CASE("classes restrict into the previous level") {
  const auto five = enumerate(5).classes;
  const std::set<CanonicalKey> lower(five.begin(), five.end());
  for (const CanonicalKey& k : enumerate(6).classes) {
    const RotationSystem rs = k.to_rotation_system();
    CHECK(canonical_form(rs).key == k);
    for (VertexId v = 1; v <= 6; ++v) CHECK(lower.count(canonical_form(delete_vertex(rs, v)).key) == 1);
  }
}

TEST_CASE("extend_parent children are canonical and realizable") {
  ExtendStats stats;
  const auto children = extend_parent(enumerate(5).classes.front().to_rotation_system(), {}, &stats);
  CHECK(!children.empty());
  CHECK(stats.candidates >= stats.accepted);
  CHECK(stats.accepted >= stats.realizable);
  for (const CanonicalKey& k : children) {
    CHECK(realize(k.to_rotation_system()).realizable());
    CHECK(canonical_form(k.to_rotation_system()).key == k);
  }
}

TEST_CASE("worker count and edge order do not change the census") {
  EnumerateOptions one;
  EnumerateOptions three;
  three.extend.workers = 3;
  EnumerateOptions reordered;
  reordered.extend.realize.order = EdgeOrder::kMostConstrainedFirst;
  const auto base = enumerate(6, one).classes;
  CHECK(enumerate(6, three).classes == base);
  CHECK(enumerate(6, reordered).classes == base);
}

TEST_CASE("snapshots do not depend on the worker count") {
  auto snapshots = [](int workers) {
    std::vector<std::string> out;
    EnumerateOptions o;
    o.extend.workers = workers;
    o.extend.batch = 2;
    o.extend.on_checkpoint = [&](const Frontier& f) { out.push_back(snapshot_text(f)); };
    enumerate(6, o);
    return out;
  };
  const auto a = snapshots(1);
  // 1, 2 and 5 parents at levels 3, 4, 5 give 1 + 1 + 3 batches.
  CHECK(a.size() == 5);
  CHECK(snapshots(4) == a);
}

TEST_CASE("interrupted census resumes to the same result") {
  const std::string path = temp_path("goodkn_census_resume_test.snap");
  std::remove(path.c_str());
  EnumerateOptions o;
  o.checkpoint_path = path;
  o.resume = true;
  o.extend.batch = 1;
  // K3 -> K4 -> K5 take three parents, leaving two of the five K5 classes.
  o.extend.max_parents = 5;
  Census first = enumerate(6, o);
  CHECK_FALSE(first.complete);
  CHECK(first.frontier.n == 5);
  CHECK(first.frontier.cursor == 2);
  const Frontier saved = load_snapshot(path);
  CHECK(saved == first.frontier);

  o.extend.max_parents = 0;
  const Census resumed = enumerate(6, o);
  REQUIRE(resumed.complete);
  CHECK(resumed.classes == enumerate(6).classes);
  std::remove(path.c_str());
}

TEST_CASE("snapshot save and load") {
  Frontier f = initial_frontier();
  extend(f);
  extend(f);
  ExtendOptions o;
  o.max_parents = 2;
  CHECK_FALSE(extend(f, o));
  const std::string path = temp_path("goodkn_snapshot_test.snap");
  save_snapshot(path, f);
  CHECK(load_snapshot(path) == f);
  std::remove(path.c_str());

  const std::string text = snapshot_text(f);
  CHECK(text.rfind("goodkn-census-snapshot 1\n", 0) == 0);
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return read_snapshot(in);
  };
  CHECK(read(text) == f);

  std::string flipped = text;
  flipped[text.find("cursor") + 7] ^= 1;
  CHECK_THROWS_AS(read(flipped), CorruptSnapshot);
  CHECK_THROWS_AS(read(text.substr(0, text.size() / 2)), CorruptSnapshot);
  CHECK_THROWS_AS(read(""), CorruptSnapshot);
  std::string tampered = text;
  tampered[tampered.size() - 3] = tampered[tampered.size() - 3] == '0' ? '1' : '0';
  CHECK_THROWS_AS(read(tampered), CorruptSnapshot);
}

TEST_CASE("records") {
  const CensusRecord r = make_record(convex_rotation(5));
  CHECK(format_record(r) ==
        "n=5 key=2345/1345/1245/1235/1234 empty=10 t=6,6,6,6,6 l=0,0,0,0,0 lucky=5 crossings=5");
  CHECK(parse_record(format_record(r)) == r);
  CHECK_THROWS(parse_record("n=5 key=2345/1345/1245/1235/1234 empty=10"));
  CHECK_THROWS(parse_record("n=5 bogus=1"));
  CHECK_THROWS_AS(make_record(RotationSystem({{2, 3, 4}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("record invariants up to n = 6") {
  for (int n = 4; n <= 6; ++n) {
    const auto records = census_records(enumerate(n).classes, 2);
    for (const CensusRecord& r : records) {
      CHECK(r.empty >= n);
      int sum = 0;
      for (int t : r.t) sum += t;
      CHECK(sum == 3 * r.empty);
      CHECK(r.lucky <= n);
      CHECK(r.lucky >= 1);
      CHECK(r.empty == count_empty_triangles(r.key.to_rotation_system()));
    }
    const CensusSummary s = summarize(records);
    CHECK(s.min_empty == 2 * n - 4);
    CHECK(s.lucky_free == 0);
    if (n == 4) CHECK(s.max_empty == 4);
  }
}

TEST_CASE("enumerate rejects tiny n") { CHECK_THROWS_AS(enumerate(2), std::invalid_argument); }
