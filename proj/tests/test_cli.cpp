#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "goodkn/census.h"
#include "goodkn/cli.h"
#include "goodkn/drawing_io.h"
#include "goodkn/drawing.h"
#include "goodkn/render.h"
#include "test_util.h"

using namespace goodkn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "goodkn_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int count(const std::string& text, const std::string& needle) {
  int c = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
  return c;
}

const std::string kPlanar = "4\n1: 2 4 3\n2: 3 4 1\n3: 1 4 2\n4: 1 2 3\n";
const std::string kUnrealizable = "4\n1: 2 3 4\n2: 1 3 4\n3: 1 4 2\n4: 1 2 3\n";

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"analyze"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("generate") {
  const Run r = run({"generate", "--family", "convex", "--n", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "4\n1: 2 3 4\n2: 1 3 4\n3: 1 2 4\n4: 1 2 3\n");
  CHECK(parse_rotation_system(r.out) == convex_rotation(4));
  const Run twisted = run({"generate", "--family", "twisted", "--n", "4"});
  CHECK(twisted.code == kExitUsage);
  CHECK(twisted.err.find("twisted") != std::string::npos);
  CHECK(run({"generate", "--family", "convex", "--n", "2"}).code == kExitUsage);
}

TEST_CASE("generate then analyze gives C(n,3) empty triangles") {
  for (int n = 3; n <= 10; ++n) {
    const std::string path = temp_path("convex" + std::to_string(n) + ".rot");
    REQUIRE(run({"generate", "--family", "convex", "--n", std::to_string(n), "--out", path}).code == kExitOk);
    const Run a = run({"analyze", "--rotation", path});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("empty=" + std::to_string(n * (n - 1) * (n - 2) / 6) + "\n") != std::string::npos);
  }
}

TEST_CASE("analyze") {
  const std::string c5 = temp_path("c5.rot");
  run({"generate", "--family", "convex", "--n", "5", "--out", c5});
  const Run a = run({"analyze", "--rotation", c5});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("empty=10\n") != std::string::npos);
  CHECK(a.out.find("all vertices lucky") != std::string::npos);
  CHECK(a.out.find("crossings=5\n") != std::string::npos);

  const Run p = run({"analyze", "--rotation", write_temp("planar.rot", kPlanar)});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("empty=4\n") != std::string::npos);
  CHECK(p.out.find("crossings=0\n") != std::string::npos);

  const Run bad = run({"analyze", "--rotation", write_temp("bad.rot", "4\n1: 2 3 4\n2: 3 4\n")});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({"analyze", "--rotation", temp_path("missing.rot")}).code == kExitUsage);
}

TEST_CASE("realize") {
  const std::string draw = temp_path("planar.draw");
  const Run r = run({"realize", "--rotation", write_temp("planar.rot", kPlanar), "--out", draw});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "realizable crossings=0\n");
  CHECK(parse_drawing(slurp(draw)).source == parse_rotation_system(kPlanar));
  const Run u = run({"realize", "--rotation", write_temp("bad4.rot", kUnrealizable)});
  CHECK(u.code == kExitFailed);
  CHECK(u.out.find("unrealizable") != std::string::npos);
}

TEST_CASE("render") {
  const std::string c4 = temp_path("c4.rot");
  run({"generate", "--family", "convex", "--n", "4", "--out", c4});
  const std::string svg = temp_path("c4.svg");
  CHECK(run({"render", "--rotation", c4, "--out", svg}).code == kExitOk);
  const std::string text = slurp(svg);
  CHECK(text.rfind("<svg", 0) == 0);
  CHECK(count(text, "class=\"crossing\"") == 1);
  CHECK(count(text, "class=\"edge\"") == 6);

  const std::string psvg = temp_path("planar.svg");
  CHECK(run({"render", "--rotation", write_temp("planar.rot", kPlanar), "--out", psvg}).code == kExitOk);
  CHECK(count(slurp(psvg), "class=\"crossing\"") == 0);

  CHECK(run({"render", "--rotation", write_temp("bad4.rot", kUnrealizable), "--out", temp_path("bad.svg")}).code ==
        kExitFailed);
}

TEST_CASE("enumerate and verify") {
  const std::string out = temp_path("census5.txt");
  std::remove((out + ".snap").c_str());
  const Run e = run({"enumerate", "--n", "5", "--out", out});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("classes=5 ") != std::string::npos);
  std::istringstream lines(slurp(out));
  int records = 0;
  for (std::string line; std::getline(lines, line); ++records) CHECK(parse_record(line).n == 5);
  CHECK(records == 5);

  const Run v = run({"verify", "--n", "6", "--claim", "OBS_2N4"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("OBS_2N4 n=6 classes=102: pass") != std::string::npos);
  CHECK(run({"verify", "--n", "4", "--claim", "THEOREM_N"}).code == kExitOk);
  CHECK(run({"verify", "--n", "5", "--claim", "ALL", "--census", out}).code == kExitOk);
  CHECK(run({"verify", "--n", "5", "--claim", "MADE_UP"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "4", "--claim", "DELETION_IDENTITY"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "6", "--census", out}).code == kExitUsage);
}

TEST_CASE("enumerate stops and resumes") {
  const std::string out = temp_path("census6.txt");
  const std::string snap = out + ".snap";
  std::remove(snap.c_str());
  const Run first = run({"enumerate", "--n", "6", "--out", out, "--batch", "1", "--max-parents", "4"});
  CHECK(first.code == kExitInterrupted);
  CHECK(std::filesystem::exists(snap));
  const Run second = run({"enumerate", "--n", "6", "--out", out, "--resume", "--workers", "2"});
  CHECK(second.code == kExitOk);
  CHECK(second.out.find("classes=102 ") != std::string::npos);

  std::ofstream(snap, std::ios::app) << "junk\n";
  CHECK(run({"enumerate", "--n", "6", "--out", out, "--resume"}).code == kExitUsage);
}

TEST_CASE("output does not depend on workers") {
  const std::string a = temp_path("w1.txt"), b = temp_path("w3.txt");
  std::remove((a + ".snap").c_str());
  std::remove((b + ".snap").c_str());
  CHECK(run({"enumerate", "--n", "6", "--out", a, "--workers", "1"}).code == kExitOk);
  CHECK(run({"enumerate", "--n", "6", "--out", b, "--workers", "3"}).code == kExitOk);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a + ".snap") == slurp(b + ".snap"));
}

TEST_CASE("render draws one marker per crossing") {
  for (int n = 3; n <= 7; ++n) {
    const std::string rot = temp_path("convex_r" + std::to_string(n) + ".rot");
    const std::string svg = temp_path("convex_r" + std::to_string(n) + ".svg");
    run({"generate", "--family", "convex", "--n", std::to_string(n), "--out", rot});
    REQUIRE(run({"render", "--rotation", rot, "--out", svg}).code == kExitOk);
    const std::string text = slurp(svg);
    CHECK(count(text, "class=\"crossing\"") == n * (n - 1) * (n - 2) * (n - 3) / 24);
    CHECK(count(text, "class=\"edge\"") == n * (n - 1) / 2);
  }
  for (const CanonicalKey& k : enumerate(6).classes) {
    const RotationSystem rs = k.to_rotation_system();
    const std::string rot = write_temp("class6.rot", format_rotation_system(rs));
    const std::string svg = temp_path("class6.svg");
    REQUIRE(run({"render", "--rotation", rot, "--out", svg}).code == kExitOk);
    CHECK(count(slurp(svg), "class=\"crossing\"") == static_cast<int>(make_record(rs).crossings));
  }
}

namespace {

double cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Pairs of map segments without a shared node that touch, plus pairs of
// nodes placed at the same point.
int layout_defects(const PlanarMap& m, const std::vector<Point>& p) {
  int defects = 0;
  for (int d = 0; d < m.dart_count(); d += 2)
    for (int e = d + 2; e < m.dart_count(); e += 2) {
      const int a0 = m.origin(d), a1 = m.target(d), b0 = m.origin(e), b1 = m.target(e);
      if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) continue;
      if (cross(p[a0], p[a1], p[b0]) * cross(p[a0], p[a1], p[b1]) <= 0 &&
          cross(p[b0], p[b1], p[a0]) * cross(p[b0], p[b1], p[a1]) <= 0)
        ++defects;
    }
  for (int i = 0; i < m.node_count(); ++i)
    for (int j = i + 1; j < m.node_count(); ++j)
      if (std::abs(p[i].x - p[j].x) + std::abs(p[i].y - p[j].y) < 1e-9) ++defects;
  return defects;
}

}  // namespace

TEST_CASE("layout is a straight-line embedding of the planar map") {
  for (int n = 3; n <= 6; ++n)
    for (const CanonicalKey& k : enumerate(n).classes) {
      const RealizeResult r = realize(k.to_rotation_system());
      REQUIRE(r.realizable());
      const auto points = layout(r.drawing->map);
      REQUIRE(points.size() == static_cast<std::size_t>(r.drawing->map.node_count()));
      CHECK(layout_defects(r.drawing->map, points) == 0);
    }
}
