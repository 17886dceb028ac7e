#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "crossforge/bounds_table.hpp"
#include "crossforge/closed_forms.hpp"
#include "crossforge/conformance.hpp"
#include "crossforge/drawing.hpp"
#include "crossforge/lower_bounds.hpp"
#include "crossforge/svg.hpp"
#include "crossforge/verify.hpp"

namespace crossforge::cli {

namespace {

/// Raised for bad parameters after parsing; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

struct Common {
  std::string m = "4..8";
  std::string n = "3..7";
  std::string family = "cycle";
  std::string format = "table";
  std::string output;
  bool unsafe_large = false;
};

std::pair<int, int> checked_range(const std::string& text, const char* name, int lo_min, int hi_max, bool unsafe) {
  std::pair<int, int> r;
  try {
    r = parse_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid ") + name + " range: " + e.what());
  }
  if (r.first < lo_min) throw UsageError(std::string(name) + " must be >= " + std::to_string(lo_min));
  if (!unsafe && r.second > hi_max) {
    throw UsageError(std::string(name) + " = " + std::to_string(r.second) + " exceeds the desk-scale cap " +
                     std::to_string(hi_max) + " (pass --unsafe-large to override)");
  }
  return r;
}

void check_format(const std::string& f) {
  if (f != "table" && f != "csv" && f != "json") throw UsageError("format must be table, csv or json");
}

Family family_of(const std::string& text) {
  try {
    return parse_family(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

template <class F>
auto parse_or_usage(F parse, const std::string& text) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---- bounds -----------------------------------------------------------------

int cmd_bounds(const Common& c, std::ostream& out) {
  check_format(c.format);
  const Family family = family_of(c.family);
  const auto [m_lo, m_hi] = checked_range(c.m, "m", 1, kFormulaMaxM, c.unsafe_large);
  const auto [n_lo, n_hi] = checked_range(c.n, "n", family == Family::Path ? 2 : 3, kMaxN, c.unsafe_large);
  std::vector<BoundsRow> rows;
  try {
    rows = bounds_table(family, m_lo, m_hi, n_lo, n_hi);
  } catch (const DeferredCase& e) {
    throw UsageError(e.what());
  }
  if (c.format == "csv") {
    emit(bounds_csv(rows), c.output, out);
  } else if (c.format == "json") {
    emit(bounds_json(rows).dump(2) + "\n", c.output, out);
  } else {
    std::vector<std::vector<std::string>> t{{"m", "n", "lower_raw", "lower_clamped", "upper", "ratio", "drawing"}};
    for (const auto& r : rows) {
      t.push_back({std::to_string(r.m), std::to_string(r.n), r.lower_raw.to_decimal(3), r.lower_clamped.to_decimal(3),
                   r.upper.to_string(), r.ratio(), r.drawing ? r.drawing->to_string() : "-"});
    }
    emit(table(t), c.output, out);
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> lemmas{"all"};
  bool quick = false;
  bool m_given = false;
  bool n_given = false;
  std::string sign = to_string(default_interpretations().sign);
  std::string alternation = to_string(default_interpretations().alternation);
  std::string clauses = to_string(default_interpretations().clauses);
  int threads = 0;
};

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  check_format(c.format);
  VerifyOptions o = v.quick ? quick_options() : VerifyOptions{};
  o.lemmas = v.lemmas;
  if (v.m_given) std::tie(o.m_lo, o.m_hi) = checked_range(c.m, "m", 1, kBruteForceMaxM, c.unsafe_large);
  if (v.n_given) std::tie(o.n_lo, o.n_hi) = checked_range(c.n, "n", 2, kMaxN, c.unsafe_large);
  o.sign = parse_or_usage(parse_sign_reading, v.sign);
  o.alternation = parse_or_usage(parse_alternation_reading, v.alternation);
  o.clauses = parse_or_usage(parse_clause_reading, v.clauses);
  o.threads = v.threads;

  VerificationReport report;
  try {
    report = verify_sweep(o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (c.format == "json") {
    auto j = report.to_json();
    auto& d = j["discrepancies"] = nlohmann::ordered_json::array();
    for (const auto& rec : report.discrepancies()) d.push_back(nlohmann::ordered_json::parse(rec.to_json_line()));
    emit(j.dump(2) + "\n", c.output, out);
  } else {
    if (c.format == "csv") {
      emit(report.to_csv(), c.output, out);
    } else {
      std::vector<std::vector<std::string>> t{{"lemma", "m", "n", "l", "branch", "printed", "computed", "status"}};
      for (const auto& cell : report.cells) {
        t.push_back({cell.lemma, std::to_string(cell.m), cell.n ? std::to_string(*cell.n) : "-",
                     cell.l ? std::to_string(*cell.l) : "-", cell.branch,
                     cell.printed ? cell.printed->to_string() : "-", cell.computed ? cell.computed->to_string() : "-",
                     to_string(cell.status)});
      }
      std::string text = table(t);
      text += "match=" + std::to_string(report.count(CellStatus::Match)) +
              " mismatch=" + std::to_string(report.count(CellStatus::Mismatch)) +
              " n/a=" + std::to_string(report.count(CellStatus::NotApplicable)) + "\n";
      emit(text, c.output, out);
    }
    for (const auto& rec : report.discrepancies()) err << rec.to_json_line() << '\n';
  }
  return report.all_match() ? kExitOk : kExitMismatch;
}

// ---- count / render ------------------------------------------------------------

CylinderScene scene_for(Family family, int m, int n) {
  if (family == Family::Path) {
    if (m <= 3) return planar_small_case(m, n, family);
    if (n < 4) throw UsageError("n = 2, 3 deferred: no path construction for short paths");
    return realize_path_drawing(m, n);
  }
  if (m <= 2) return planar_small_case(m, n, family);
  if (m == 3) throw UsageError("no drawing is constructed for m = 3 cycles");
  return realize_cycle_drawing(m, n);
}

struct CountArgs {
  std::string method = "geometric";
};

int cmd_count(const Common& c, const CountArgs& a, std::ostream& out) {
  const Family family = family_of(c.family);
  const int cap = a.method == "closed" ? kFormulaMaxM : kBruteForceMaxM;
  const auto [m, m_hi] = checked_range(c.m, "m", 1, cap, c.unsafe_large);
  const auto [n, n_hi] = checked_range(c.n, "n", family == Family::Path ? 2 : 3, kMaxN, c.unsafe_large);
  if (m != m_hi || n != n_hi) throw UsageError("count takes a single m and n");
  if (a.method == "geometric") {
    out << count_scene_crossings(scene_for(family, m, n)) << '\n';
  } else if (a.method == "closed") {
    if (family == Family::Path) {
      try {
        out << upper_bound_path(m, n) << '\n';
      } catch (const DeferredCase& e) {
        throw UsageError(e.what());
      }
    } else if (m <= 3) {
      out << small_case_values(m, n, family).value << '\n';
    } else {
      out << nu_cycle_drawing(m, n) << '\n';
    }
  } else if (a.method == "schedule") {
    if (family != Family::Cycle || m < 4) throw UsageError("schedule counts need a cycle with m >= 4");
    out << schedule_total(m, n) << '\n';
  } else {
    throw UsageError("method must be geometric, closed or schedule");
  }
  return kExitOk;
}

struct RenderArgs {
  std::string scene_json;
};

int cmd_render(const Common& c, const RenderArgs& a, std::ostream& out) {
  const Family family = family_of(c.family);
  const auto [m, m_hi] = checked_range(c.m, "m", 1, kBruteForceMaxM, c.unsafe_large);
  const auto [n, n_hi] = checked_range(c.n, "n", family == Family::Path ? 2 : 3, kMaxN, c.unsafe_large);
  if (m != m_hi || n != n_hi) throw UsageError("render takes a single m and n");
  if (c.output.empty()) throw UsageError("render needs -o <file.svg>");
  const CylinderScene scene = scene_for(family, m, n);
  emit_svg(scene, c.output);
  if (!a.scene_json.empty()) emit(scene.to_json().dump(2) + "\n", a.scene_json, out);
  out << "wrote " << c.output << " crossings=" << count_scene_crossings(scene) << '\n';
  return kExitOk;
}

// ---- congestion / perm / graph / caps / conformance --------------------------------

struct CongestionArgs {
  std::string graph = "kmm";
};

int cmd_congestion(const Common& c, const CongestionArgs& a, std::ostream& out) {
  const auto [m, m_hi] = checked_range(c.m, "m", 4, 20, c.unsafe_large);
  if (m != m_hi) throw UsageError("congestion takes a single m");
  Embedding e;
  if (a.graph == "kmm") {
    e = build_embedding_kmm(m);
  } else if (a.graph == "km2m") {
    e = build_embedding_km2m(m);
  } else {
    throw UsageError("graph must be kmm or km2m");
  }
  const CongestionReport rep = congestion(e);
  out << "max=" << rep.max << " uniform=" << (rep.uniform() ? "true" : "false") << '\n';
  return kExitOk;
}

struct PermArgs {
  int l = 1;
  std::string clauses = to_string(default_interpretations().clauses);
  bool trace = false;
};

int cmd_perm(const Common& c, const PermArgs& a, std::ostream& out) {
  const auto [m, m_hi] = checked_range(c.m, "m", 2, kFormulaMaxM, c.unsafe_large);
  if (m != m_hi) throw UsageError("perm takes a single m");
  if (a.l < 1 || a.l > 8) throw UsageError("-l must be in 1..8");
  const ClauseReading reading = parse_or_usage(parse_clause_reading, a.clauses);
  if (a.l <= 3) {
    try {
      const LayerPermutation p = base_permutation(a.l, m);
      out << p.to_line() << "\ninv=" << inversion_number(p) << '\n';
    } catch (const NotABijection& e) {
      out << "error: " << e.what() << '\n';
      return kExitMismatch;
    }
    return kExitOk;
  }
  const auto [n, n_hi] = checked_range(c.n, "n", 3, kMaxN, c.unsafe_large);
  if (n != n_hi) throw UsageError("perm takes a single n");
  if (n % 2 == 0 || m <= n) throw UsageError("f4..f8 need m > odd n >= 3");
  try {
    const ClauseTrace t = extended_permutation_trace(a.l, m, n, reading);
    out << t.permutation.to_line() << "\ninv=" << inversion_number(t.permutation) << '\n';
    if (a.trace) {
      for (std::size_t i = 0; i < t.clause_of.size(); ++i) {
        out << i << ' ' << t.permutation(static_cast<int>(i)) << ' ' << t.clause_of[i] << '\n';
      }
    }
  } catch (const ClauseError& e) {
    out << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_graph(const Common& c, std::ostream& out) {
  const Family family = family_of(c.family);
  const auto [m, m_hi] = checked_range(c.m, "m", 1, kFormulaMaxM, c.unsafe_large);
  const auto [n, n_hi] = checked_range(c.n, "n", family == Family::Path ? 2 : 3, kMaxN, c.unsafe_large);
  if (m != m_hi || n != n_hi) throw UsageError("graph takes a single m and n");
  std::ostringstream os;
  write_edge_list(os, build_kronecker(family, m, n));
  emit(os.str(), c.output, out);
  return kExitOk;
}

struct CapsArgs {
  int restarts = CapSearchOptions{}.restarts;
  unsigned seed = CapSearchOptions{}.seed;
  bool assignment = false;
};

int cmd_caps(const Common& c, const CapsArgs& a, std::ostream& out) {
  const auto [m_lo, m_hi] = checked_range(c.m, "m", 2, kBruteForceMaxM, c.unsafe_large);
  CapSearchOptions o;
  o.restarts = a.restarts;
  o.seed = a.seed;
  for (int m = m_lo; m <= m_hi; ++m) {
    const CapAssignment r = cap_route_search(m, o);
    out << "m=" << m << " crossings=" << r.crossings << " all_lateral=" << annulus_crossings(m)
        << " search=" << (r.exhaustive ? "exhaustive" : "local") << '\n';
    if (a.assignment) {
      for (std::size_t k = 0; k < r.edges.size(); ++k) {
        if (r.over_cap[k]) out << "  cap " << r.edges[k].first << "->" << r.edges[k].second << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_conformance(const Common& c, std::ostream& out) {
  emit(conformance_document().dump(2) + "\n", c.output, out);
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"crossforge: crossing-number constructions and bounds for K_m x P_n and K_m x C_n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "crossforge 0.1.0");

  Common c;
  auto add_common = [&](CLI::App* sub, bool ranges, bool family, bool format, bool output) {
    if (ranges) {
      sub->add_option("-m", c.m, "m or range a..b");
      sub->add_option("-n", c.n, "n or range a..b");
    }
    if (family) sub->add_option("--family", c.family, "path or cycle")->capture_default_str();
    if (format) sub->add_option("--format", c.format, "table, csv or json")->capture_default_str();
    if (output) sub->add_option("-o,--output", c.output, "output file (default stdout)");
    sub->add_flag("--unsafe-large", c.unsafe_large, "lift the desk-scale parameter caps");
  };

  auto* bounds = app.add_subcommand("bounds", "lower/upper bound table over an (m, n) grid");
  add_common(bounds, true, true, true, true);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check closed forms against their oracles");
  add_common(verify, false, false, true, true);
  auto* vm = verify->add_option("-m", c.m, "m or range a..b (default 4..12)");
  auto* vn = verify->add_option("-n", c.n, "n or range a..b (default 3..9)");
  verify->add_option("--lemma", va.lemmas, "identifier(s), or 'all'")->capture_default_str();
  verify->add_flag("--quick", va.quick, "pinned small grid");
  verify->add_option("--sign-reading", va.sign, "sign factor reading of the m > odd n count")->capture_default_str();
  verify->add_option("--alternation", va.alternation, "layer-parity or block-offset")->capture_default_str();
  verify->add_option("--clauses", va.clauses, "repaired or as-printed")->capture_default_str();
  verify->add_option("--threads", va.threads, "worker threads (default CROSSFORGE_THREADS or all cores)");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "crossings of the constructed drawing");
  add_common(count, true, true, false, false);
  count->add_option("--method", ca.method, "geometric, closed or schedule")->capture_default_str();

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "write the drawing as SVG");
  add_common(render, true, true, false, true);
  render->add_option("--scene-json", ra.scene_json, "also dump the scene as JSON");

  CongestionArgs cga;
  auto* cong = app.add_subcommand("congestion", "congestion of the layer embeddings");
  add_common(cong, false, false, false, false);
  cong->add_option("-m", c.m, "m")->required();
  cong->add_option("--graph", cga.graph, "kmm or km2m")->capture_default_str();

  PermArgs pa;
  auto* perm = app.add_subcommand("perm", "print a layer permutation");
  add_common(perm, true, false, false, false);
  perm->add_option("-l", pa.l, "family 1..8")->required();
  perm->add_option("--clauses", pa.clauses, "repaired or as-printed")->capture_default_str();
  perm->add_flag("--trace", pa.trace, "show the defining clause per index");

  auto* graph = app.add_subcommand("graph", "edge list of K_m x P_n or K_m x C_n");
  add_common(graph, true, true, false, true);

  CapsArgs cpa;
  auto* caps = app.add_subcommand("caps", "search end-layer cap routings");
  add_common(caps, false, false, false, false);
  caps->add_option("-m", c.m, "m or range a..b")->required();
  caps->add_option("--restarts", cpa.restarts, "local-search restarts")->capture_default_str();
  caps->add_option("--seed", cpa.seed, "random seed")->capture_default_str();
  caps->add_flag("--assignment", cpa.assignment, "list the edges routed over the cap");

  auto* conf = app.add_subcommand("conformance", "regenerate the interpretation conformance document");
  add_common(conf, false, false, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(c, out);
    if (*verify) {
      va.m_given = vm->count() > 0;
      va.n_given = vn->count() > 0;
      return cmd_verify(c, va, out, err);
    }
    if (*count) return cmd_count(c, ca, out);
    if (*render) return cmd_render(c, ra, out);
    if (*cong) return cmd_congestion(c, cga, out);
    if (*perm) return cmd_perm(c, pa, out);
    if (*graph) return cmd_graph(c, out);
    if (*caps) return cmd_caps(c, cpa, out);
    if (*conf) return cmd_conformance(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace crossforge::cli
