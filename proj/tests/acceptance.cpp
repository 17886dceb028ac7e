// Acceptance run: one [PASS]/[FAIL] line per criterion, exit 1 on any FAIL.
// Usage: acceptance <conformance.json> <output dir>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "crossforge/cap_search.hpp"
#include "crossforge/closed_forms.hpp"
#include "crossforge/conformance.hpp"
#include "crossforge/drawing.hpp"
#include "crossforge/layer_count.hpp"
#include "crossforge/lower_bounds.hpp"
#include "crossforge/permutation.hpp"
#include "crossforge/scene.hpp"
#include "crossforge/svg.hpp"
#include "crossforge/verify.hpp"

using namespace crossforge;
namespace fs = std::filesystem;

namespace {

// Pinned budgets.
constexpr double kAc1Seconds = 60.0;
constexpr double kAc6Seconds = 30.0;
constexpr double kAc8Seconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& what) {
  if (o.pass) o.detail = what;
  o.pass = false;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int cells = 0;
  for (int m = 4; m <= 12; ++m) {
    for (int l = 1; l <= 3; ++l) {
      try {
        const auto f = base_permutation(l, m);
        ++cells;
        if (sector_crossings_formula(f) != sector_crossings_bruteforce(f)) {
          fail(o, "l=" + std::to_string(l) + " m=" + std::to_string(m));
        }
      } catch (const NotABijection&) {
        // f3 is only a bijection for even m
      }
    }
    for (int n = 3; n < m; n += 2) {
      for (int l = 4; l <= 8; ++l) {
        if (!is_admissible(l, m, n)) continue;
        const auto f = extended_permutation(l, m, n);
        ++cells;
        if (sector_crossings_formula(f) != sector_crossings_bruteforce(f)) {
          fail(o, "l=" + std::to_string(l) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
    }
  }
  const double s = seconds_since(t0);
  if (s >= kAc1Seconds) fail(o, "took " + fmt_seconds(s));
  if (o.pass) o.detail = std::to_string(cells) + " permutations, " + fmt_seconds(s);
  return o;
}

Outcome ac2() {
  Outcome o;
  int cells = 0;
  for (int m = 4; m <= 8; ++m) {
    for (int n : {4, 6}) {
      ++cells;
      const ExactValue expected = ExactValue(n) * ExactValue(m * (m - 1) * (m - 2) * (3 * m - 5)) / ExactValue(12);
      if (ExactValue(schedule_total(m, n)) != expected) fail(o, "even m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  for (int n : {5, 7}) {
    for (int m = 4; m <= n; ++m) {
      ++cells;
      const ExactValue expected = cycle_base(m, n) + ExactValue(choose2(m));
      if (ExactValue(schedule_total(m, n)) != expected) fail(o, "odd m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " shapes";
  return o;
}

Outcome ac3() {
  Outcome o;
  struct Spot {
    Family family;
    int m, n;
    std::int64_t value;
  };
  const Spot spots[] = {{Family::Path, 4, 4, 12},  {Family::Path, 5, 4, 50},  {Family::Path, 6, 4, 156},
                        {Family::Cycle, 4, 4, 56}, {Family::Cycle, 4, 5, 76}, {Family::Cycle, 5, 5, 260},
                        {Family::Cycle, 4, 3, 52}};
  for (const auto& s : spots) {
    const std::string tag = to_string(s.family) + "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
    const ExactValue want(s.value);
    ExactValue closed, oracle;
    std::int64_t geometric = 0;
    if (s.family == Family::Path) {
      closed = nu_path_drawing(s.m, s.n);
      oracle = path_components(s.m, s.n).total;
      geometric = count_scene_crossings(realize_path_drawing(s.m, s.n));
    } else {
      closed = nu_cycle_drawing(s.m, s.n);
      oracle = ExactValue(schedule_total(s.m, s.n));
      geometric = count_scene_crossings(realize_cycle_drawing(s.m, s.n));
    }
    if (closed != want || oracle != want || ExactValue(geometric) != want) {
      std::ostringstream os;
      os << tag << " closed=" << closed << " oracle=" << oracle << " geometric=" << geometric;
      fail(o, os.str());
    }
  }
  if (o.pass) o.detail = "7 spot values, three methods each";
  return o;
}

Outcome ac4(const Interpretations& frozen, const nlohmann::json& conformance) {
  Outcome o;
  VerifyOptions opt;
  opt.lemmas = {"3.12"};
  opt.m_lo = 4;
  opt.m_hi = 12;
  opt.n_lo = 3;
  opt.n_hi = 7;
  opt.sign = frozen.sign;
  opt.alternation = frozen.alternation;
  opt.clauses = frozen.clauses;
  const auto report = verify_sweep(opt);
  std::size_t matched = 0, documented = 0, applicable = 0;
  for (const auto& c : report.cells) {
    if (c.status == CellStatus::NotApplicable || !c.n || *c.n % 2 == 0 || c.m <= *c.n) continue;
    ++applicable;
    if (c.status == CellStatus::Match) {
      ++matched;
    } else if (c.printed && c.computed) {
      ++documented;
    } else {
      fail(o, "undocumented mismatch at m=" + std::to_string(c.m));
    }
  }
  if (applicable == 0) fail(o, "no m > odd n cells");
  const std::string recorded = conformance.at("defaults").at("sign").get<std::string>();
  if (recorded != to_string(frozen.sign)) fail(o, "conformance file sign reading differs");
  const auto& ev = conformance.at("evidence").at("sign").at(recorded);
  if (ev.at("match") != ev.at("cells")) fail(o, "recorded reading does not pass its own evidence");
  if (o.pass) {
    o.detail = std::to_string(matched) + "/" + std::to_string(applicable) + " match, " + std::to_string(documented) +
               " documented, reading " + recorded;
  }
  return o;
}

Outcome ac5(const fs::path& outdir) {
  Outcome o;
  VerifyOptions opt;
  opt.lemmas = {"3.9", "3.10", "3.11"};
  opt.m_lo = 4;
  opt.m_hi = 15;
  opt.n_lo = 3;
  opt.n_hi = 7;
  const auto report = verify_sweep(opt);
  for (const auto& c : report.cells) {
    if (c.status == CellStatus::Mismatch && !(c.printed && c.computed)) fail(o, "mismatch without values");
    if (c.status == CellStatus::Match && !(c.printed && c.computed)) fail(o, "match without values");
  }
  fs::create_directories(outdir);
  const fs::path csv = outdir / "algebra_audit.csv";
  const fs::path json = outdir / "algebra_audit.json";
  std::ofstream(csv) << report.to_csv();
  std::ofstream(json) << report.to_json().dump(2) << '\n';
  if (!fs::exists(csv) || fs::file_size(csv) == 0) fail(o, "audit artifact missing");
  if (o.pass) {
    o.detail = std::to_string(report.cells.size()) + " cells: " + std::to_string(report.count(CellStatus::Match)) +
               " match, " + std::to_string(report.count(CellStatus::Mismatch)) + " mismatch, " +
               std::to_string(report.count(CellStatus::NotApplicable)) + " n/a -> " + csv.string();
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int m = 4; m <= 20; ++m) {
    for (const auto& e : {build_embedding_kmm(m), build_embedding_km2m(m)}) {
      e.validate();
      const auto rep = congestion(e);
      const std::int64_t want = static_cast<std::int64_t>(m - 2) * (m + 2);
      if (!rep.uniform() || rep.max != want) fail(o, "m=" + std::to_string(m) + " parts=" + std::to_string(e.parts));
      if (rep.sum() != rep.total_route_length) fail(o, "conservation at m=" + std::to_string(m));
    }
  }
  const double s = seconds_since(t0);
  if (s >= kAc6Seconds) fail(o, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "m 4..20, " + fmt_seconds(s);
  return o;
}

Outcome ac7() {
  Outcome o;
  int cells = 0;
  for (int m = 4; m <= 40; ++m) {
    for (int n = 3; n <= 9; ++n) {
      ++cells;
      if (lower_bound_cycle(m, n).clamped > upper_bound_cycle(m, n)) {
        fail(o, "cycle m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
      if (n == 3) continue;  // path n = 3 has no upper bound here
      ++cells;
      if (lower_bound_path(m, n).clamped > upper_bound_path(m, n)) {
        fail(o, "path m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  int first = 0;
  for (int m = 4; m <= 40 && first == 0; ++m) {
    if (lb_kmm_minus_matching(m) > ExactValue(0)) first = m;
  }
  if (first != 26) fail(o, "first positive at m=" + std::to_string(first));
  if (o.pass) o.detail = std::to_string(cells) + " cells (path n=3 deferred), first positive m=26";
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto c4 = cap_route_search(4);
  const auto c5 = cap_route_search(5);
  const double s = seconds_since(t0);
  if (!c4.exhaustive || c4.crossings != 4) fail(o, "m=4 gives " + std::to_string(c4.crossings));
  if (!c5.exhaustive || c5.crossings != 15) fail(o, "m=5 gives " + std::to_string(c5.crossings));
  if (s >= kAc8Seconds) fail(o, "exhaustive search took " + fmt_seconds(s));
  const auto c6 = cap_route_search(6);
  if (c6.crossings != 48) fail(o, "m=6 local search gives " + std::to_string(c6.crossings));
  if (o.pass) o.detail = "4, 15 exhaustive; 48 local (" + fmt_seconds(s) + ")";
  return o;
}

Outcome ac9() {
  Outcome o;
  int drawings = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m <= 3; ++m) {
      ++drawings;
      if (count_scene_crossings(planar_small_case(m, n, Family::Path)) != 0) {
        fail(o, "path m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  for (int n = 3; n <= 8; ++n) {
    for (int m = 1; m <= 2; ++m) {
      ++drawings;
      if (count_scene_crossings(planar_small_case(m, n, Family::Cycle)) != 0) {
        fail(o, "cycle m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(drawings) + " drawings with 0 crossings";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<int, std::string> run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "crossforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

Outcome ac10(const fs::path& outdir) {
  Outcome o;
  fs::create_directories(outdir);
  for (const char* format : {"csv", "json"}) {
    const auto a = run_cli({"verify", "--lemma", "all", "--quick", "--format", format});
    const auto b = run_cli({"verify", "--lemma", "all", "--quick", "--format", format});
    if (a.first != b.first || a.second != b.second) fail(o, std::string("verify --format ") + format);
    if (a.first != cli::kExitOk && a.first != cli::kExitMismatch) fail(o, "verify exit " + std::to_string(a.first));
  }
  const std::vector<std::vector<std::string>> renders = {
      {"--family", "cycle", "-m", "4", "-n", "6"}, {"--family", "path", "-m", "5", "-n", "5"}};
  int i = 0;
  for (const auto& r : renders) {
    std::string first;
    for (int k = 0; k < 2; ++k) {
      const fs::path svg = outdir / ("render_" + std::to_string(i) + "_" + std::to_string(k) + ".svg");
      std::vector<std::string> args = {"render"};
      args.insert(args.end(), r.begin(), r.end());
      args.insert(args.end(), {"-o", svg.string()});
      if (run_cli(args).first != cli::kExitOk) fail(o, "render failed");
      const std::string bytes = slurp(svg);
      if (bytes.empty()) fail(o, "empty svg");
      if (k == 0) first = bytes;
      else if (bytes != first) fail(o, "render differs: " + svg.string());
    }
    ++i;
  }
  if (o.pass) o.detail = "verify csv/json and 2 renders byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <conformance.json> <output dir>\n";
    return 2;
  }
  nlohmann::json conformance;
  try {
    std::ifstream in(argv[1]);
    conformance = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "cannot read " << argv[1] << ": " << e.what() << '\n';
    return 2;
  }
  const Interpretations frozen = parse_interpretations(conformance);
  const fs::path outdir = argv[2];

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1", ac1},
      {"AC2", ac2},
      {"AC3", ac3},
      {"AC4", [&] { return ac4(frozen, conformance); }},
      {"AC5", [&] { return ac5(outdir); }},
      {"AC6", ac6},
      {"AC7", ac7},
      {"AC8", ac8},
      {"AC9", ac9},
      {"AC10", [&] { return ac10(outdir); }},
  };
  int failures = 0;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << "  " << o.detail << '\n';
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
