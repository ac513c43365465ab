#include "goodkn/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "goodkn/census.h"
#include "goodkn/claims.h"
#include "goodkn/crossings.h"
#include "goodkn/drawing_io.h"
#include "goodkn/render.h"
#include "goodkn/triangles.h"

namespace goodkn {

namespace {

// Failure that maps directly to an exit code and a message.
struct CommandError {
  int code;
  std::string message;
};

RotationSystem load_rotation(const std::string& path) {
  try {
    return read_rotation_file(path);
  } catch (const ParseError& e) {
    throw CommandError{kExitUsage, path + ": " + e.what()};
  } catch (const InvalidRotationSystem& e) {
    throw CommandError{kExitUsage, path + ": " + e.what()};
  } catch (const std::exception& e) {
    throw CommandError{kExitUsage, e.what()};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw CommandError{kExitUsage, "cannot write " + path};
}

std::string triangle_text(const Triangle& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

// Explains why realize() failed when a 4-vertex sub-system already does.
std::string unrealizable_reason(const RotationSystem& rs) {
  try {
    crossing_pairs(rs);
  } catch (const UnrealizableSubsystem& e) {
    return std::string(": ") + e.what();
  }
  return "";
}

std::optional<RealizedDrawing> realize_or_report(const RotationSystem& rs, std::ostream& out) {
  if (rs.size() > kMaxRealizeVertices)
    throw CommandError{kExitUsage, "realize supports at most " + std::to_string(kMaxRealizeVertices) + " vertices"};
  RealizeResult r = realize(rs);
  if (!r.realizable()) {
    out << "unrealizable" << unrealizable_reason(rs) << '\n';
    return std::nullopt;
  }
  return std::move(r.drawing);
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const RotationSystem rs = load_rotation(path);
  const int n = rs.size();
  out << "n=" << n << '\n';
  const auto empty = empty_triangles(rs);
  out << "empty=" << empty.size() << '\n';
  out << "empty triangles:";
  for (const Triangle& t : empty) out << ' ' << triangle_text(t);
  out << '\n';
  if (n >= 4) {
    int lucky = 0;
    for (VertexId v = 1; v <= n; ++v) {
      const VertexStats s = vertex_stats(rs, v);
      out << "vertex " << v << ": t=" << s.t << " l=" << s.l << (s.lucky ? " lucky" : "") << '\n';
      lucky += s.lucky;
    }
    out << "lucky=" << lucky;
    if (lucky == n) out << " (all vertices lucky)";
    if (lucky == 0) out << " (no vertex lucky)";
    out << '\n';
  }
  if (n <= kMaxRealizeVertices) {
    const RealizeResult r = realize(rs);
    if (r.realizable())
      out << "crossings=" << r.drawing->map.crossing_count() << '\n';
    else
      out << "unrealizable" << unrealizable_reason(rs) << '\n';
  }
  return kExitOk;
}

int cmd_realize(const std::string& path, const std::string& draw_path, std::ostream& out) {
  const RotationSystem rs = load_rotation(path);
  const auto d = realize_or_report(rs, out);
  if (!d) return kExitFailed;
  out << "realizable crossings=" << d->map.crossing_count() << '\n';
  if (!draw_path.empty()) write_file(draw_path, format_drawing(*d));
  return kExitOk;
}

int cmd_render(const std::string& path, const std::string& svg_path, std::ostream& out) {
  const RotationSystem rs = load_rotation(path);
  const auto d = realize_or_report(rs, out);
  if (!d) return kExitFailed;
  write_file(svg_path, render_svg(*d));
  out << "wrote " << svg_path << " crossings=" << d->map.crossing_count() << '\n';
  return kExitOk;
}

void print_summary(const CensusSummary& s, std::ostream& out) {
  out << "n=" << s.n << " classes=" << s.classes << " chiral_classes=" << s.chiral_classes
      << " labeled=" << s.labeled << " min_empty=" << s.min_empty << " max_empty=" << s.max_empty
      << " lucky_free=" << s.lucky_free << '\n';
}

struct EnumerateFlags {
  int n = 0;
  std::string out_path;
  std::string checkpoint;
  bool resume = false;
  int workers = 1;
  std::size_t batch = 32;
  std::size_t max_parents = 0;
};

std::string checkpoint_path(const EnumerateFlags& f) {
  return f.checkpoint.empty() ? f.out_path + ".snap" : f.checkpoint;
}

// Runs (or resumes) the census; nullopt when stopped by --max-parents.
std::optional<std::vector<CanonicalKey>> run_census(const EnumerateFlags& f, std::ostream& out) {
  if (f.n < 3) throw CommandError{kExitUsage, "--n must be at least 3"};
  if (f.workers < 1) throw CommandError{kExitUsage, "--workers must be at least 1"};
  EnumerateOptions options;
  options.extend.workers = f.workers;
  options.extend.batch = f.batch;
  options.extend.max_parents = f.max_parents;
  options.checkpoint_path = f.out_path.empty() && f.checkpoint.empty() ? "" : checkpoint_path(f);
  options.resume = f.resume;
  Census census;
  try {
    census = enumerate(f.n, options);
  } catch (const CorruptSnapshot& e) {
    throw CommandError{kExitUsage, options.checkpoint_path + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  if (!census.complete) {
    out << "stopped at level " << census.frontier.n << " after " << census.frontier.cursor << " of "
        << census.frontier.classes.size() << " parents; checkpoint " << options.checkpoint_path << '\n';
    return std::nullopt;
  }
  return std::move(census.classes);
}

int cmd_enumerate(const EnumerateFlags& f, std::ostream& out) {
  auto classes = run_census(f, out);
  if (!classes) return kExitInterrupted;
  std::ofstream file(f.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw CommandError{kExitUsage, "cannot write " + f.out_path};
  CensusSummary summary;
  // Records are produced in chunks so large censuses stay within memory.
  const std::size_t chunk = 4096;
  for (std::size_t begin = 0; begin < classes->size(); begin += chunk) {
    const std::size_t end = std::min(classes->size(), begin + chunk);
    const std::vector<CanonicalKey> part(classes->begin() + begin, classes->begin() + end);
    for (const CensusRecord& r : census_records(part, f.workers)) {
      file << format_record(r) << '\n';
      add_to_summary(summary, r);
    }
  }
  if (!file.flush()) throw CommandError{kExitUsage, "cannot write " + f.out_path};
  print_summary(summary, out);
  return kExitOk;
}

std::vector<CanonicalKey> read_census_keys(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw CommandError{kExitUsage, "cannot open " + path};
  std::vector<CanonicalKey> keys;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    try {
      CensusRecord r = parse_record(line);
      if (r.n != n) throw std::runtime_error("record for n=" + std::to_string(r.n));
      keys.push_back(std::move(r.key));
    } catch (const std::exception& e) {
      throw CommandError{kExitUsage, path + ": line " + std::to_string(line_no) + ": " + e.what()};
    }
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw CommandError{kExitUsage, path + ": repeated class"};
  return keys;
}

int cmd_verify(const EnumerateFlags& f, const std::string& claim_id, const std::string& census_path,
               std::ostream& out) {
  std::vector<Claim> claims;
  if (claim_id == "ALL") {
    for (Claim c : all_claims())
      if (f.n >= claim_min_n(c) && f.n <= claim_max_n(c)) claims.push_back(c);
  } else if (auto c = parse_claim(claim_id)) {
    if (f.n < claim_min_n(*c) || f.n > claim_max_n(*c))
      throw CommandError{kExitUsage, claim_id + " is stated for " + std::to_string(claim_min_n(*c)) +
                                         " <= n <= " + std::to_string(claim_max_n(*c))};
    claims.push_back(*c);
  } else {
    std::string known;
    for (Claim c : all_claims()) known += " " + claim_name(c);
    throw CommandError{kExitUsage, "unknown claim '" + claim_id + "'; known:" + known + " ALL"};
  }
  std::vector<CanonicalKey> classes;
  if (!census_path.empty()) {
    classes = read_census_keys(census_path, f.n);
  } else {
    auto run = run_census(f, out);
    if (!run) return kExitInterrupted;
    classes = std::move(*run);
  }
  bool all_pass = true;
  for (Claim c : claims) {
    const ClaimReport r = verify_claim(c, f.n, classes, f.workers);
    out << claim_name(c) << " n=" << f.n << " classes=" << r.classes << ": " << (r.pass() ? "pass" : "fail");
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
    all_pass = all_pass && r.pass();
  }
  return all_pass ? kExitOk : kExitFailed;
}

int cmd_generate(const std::string& family, int n, const std::string& path, std::ostream& out) {
  if (family != "convex") throw CommandError{kExitUsage, "unknown family '" + family + "' (available: convex)"};
  if (n < 3) throw CommandError{kExitUsage, "--n must be at least 3"};
  const std::string text = format_rotation_system(convex_rotation(n));
  if (path.empty())
    out << text;
  else
    write_file(path, text);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good drawings of complete graphs: rotation systems, empty triangles, realizability, census"};
  app.name("goodkn");
  app.require_subcommand(1);

  std::string rotation, draw_out, svg_out, gen_out, family, claim = "ALL", census_path;
  int gen_n = 0;
  EnumerateFlags ef, vf;

  auto* analyze = app.add_subcommand("analyze", "Empty triangles, per-vertex statistics and crossings");
  analyze->add_option("--rotation", rotation, ".rot file")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Decide realizability and optionally write the drawing");
  realize_cmd->add_option("--rotation", rotation, ".rot file")->required();
  realize_cmd->add_option("--out", draw_out, ".draw output");

  auto* render = app.add_subcommand("render", "Draw the realized drawing as SVG");
  render->add_option("--rotation", rotation, ".rot file")->required();
  render->add_option("--out", svg_out, "SVG output")->required();

  auto add_census_flags = [](CLI::App* cmd, EnumerateFlags& f) {
    cmd->add_option("--n", f.n, "number of vertices")->required();
    cmd->add_option("--workers", f.workers, "worker threads");
    cmd->add_option("--checkpoint", f.checkpoint, "snapshot file");
    cmd->add_flag("--resume", f.resume, "continue from the snapshot");
    cmd->add_option("--batch", f.batch, "parents between snapshots");
    cmd->add_option("--max-parents", f.max_parents, "stop after this many parents (resumable)");
  };
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Census of realizable rotation systems of K_n");
  add_census_flags(enumerate_cmd, ef);
  enumerate_cmd->add_option("--out", ef.out_path, "census output")->required();

  auto* verify = app.add_subcommand("verify", "Check a claim over the census");
  add_census_flags(verify, vf);
  verify->add_option("--claim", claim, "claim id or ALL");
  verify->add_option("--census", census_path, "census file from enumerate (otherwise computed)");

  auto* generate = app.add_subcommand("generate", "Write a rotation system of a known family");
  generate->add_option("--family", family, "convex")->required();
  generate->add_option("--n", gen_n, "number of vertices")->required();
  generate->add_option("--out", gen_out, ".rot output (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "goodkn: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(rotation, out);
    if (realize_cmd->parsed()) return cmd_realize(rotation, draw_out, out);
    if (render->parsed()) return cmd_render(rotation, svg_out, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(ef, out);
    if (verify->parsed()) return cmd_verify(vf, claim, census_path, out);
    if (generate->parsed()) return cmd_generate(family, gen_n, gen_out, out);
  } catch (const CommandError& e) {
    err << "goodkn: " << e.message << '\n';
    return e.code;
  } catch (const SearchLimitExceeded& e) {
    err << "goodkn: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace goodkn
