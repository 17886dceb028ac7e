#include "crossforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "crossforge/lower_bounds.hpp"

namespace crossforge {

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Match:
      return "match";
    case CellStatus::Mismatch:
      return "mismatch";
    case CellStatus::NotApplicable:
      return "n/a";
  }
  return "unknown";
}

const std::vector<std::string>& verifiable_lemmas() {
  static const std::vector<std::string> ids = {"2.1", "3.1",  "3.2",  "3.3",  "3.4",  "3.5",  "3.6",
                                               "3.7", "3.8",  "3.9",  "3.10", "3.11", "3.12", "3.13",
                                               "3.14", "4.1", "4.2"};
  return ids;
}

VerifyOptions quick_options() {
  VerifyOptions o;
  o.lemmas = {"all"};
  o.m_lo = 4;
  o.m_hi = 9;
  o.n_lo = 3;
  o.n_hi = 8;
  return o;
}

int default_thread_count() {
  if (const char* env = std::getenv("CROSSFORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

std::int64_t schedule_total(int m, int n, AlternationReading alternation, ClauseReading clauses) {
  const ScheduleAssignment sched = schedule_for(m, n, Family::Cycle, alternation, clauses);
  std::int64_t total = 0;
  for (const auto& f : sched.per_layer) total += sector_crossings_bruteforce(f);
  return total;
}

namespace {

using Cells = std::vector<VerificationCell>;

VerificationCell make(const std::string& lemma, int m, std::optional<int> n, std::optional<int> l, std::string branch) {
  VerificationCell c;
  c.lemma = lemma;
  c.m = m;
  c.n = n;
  c.l = l;
  c.branch = std::move(branch);
  return c;
}

VerificationCell equality(VerificationCell c, const ExactValue& printed, const ExactValue& computed) {
  c.printed = printed;
  c.computed = computed;
  c.status = printed == computed ? CellStatus::Match : CellStatus::Mismatch;
  return c;
}

VerificationCell at_most(VerificationCell c, const ExactValue& bound, const ExactValue& exact) {
  c.printed = bound;
  c.computed = exact;
  c.status = exact <= bound ? CellStatus::Match : CellStatus::Mismatch;
  return c;
}

VerificationCell not_applicable(VerificationCell c) {
  c.status = CellStatus::NotApplicable;
  return c;
}

bool large_m(int m, int n) { return n >= 3 && n % 2 == 1 && m > n; }

// Whether the cycle schedule at (m, n) uses family l: f4 always, f5/f6 for
// even s, f7/f8 for odd s.
bool scheduled(int l, int m, int n) {
  const bool even_s = (m % n) % 2 == 0;
  if (l == 4) return true;
  return (l == 5 || l == 6) ? even_s : !even_s;
}

struct Grid {
  const VerifyOptions& o;
  std::vector<std::function<Cells()>> tasks;

  void per_m(const std::function<Cells(int)>& f) {
    for (int m = o.m_lo; m <= o.m_hi; ++m) tasks.emplace_back([f, m] { return f(m); });
  }
  void per_mn(const std::function<Cells(int, int)>& f) {
    for (int m = o.m_lo; m <= o.m_hi; ++m) {
      for (int n = o.n_lo; n <= o.n_hi; ++n) tasks.emplace_back([f, m, n] { return f(m, n); });
    }
  }
};

void add_lemma(Grid& g, const std::string& id) {
  const VerifyOptions& o = g.o;
  if (id == "2.1") {
    g.per_mn([id](int m, int n) -> Cells {
      auto c = make(id, m, n, std::nullopt, m % 2 == 1 ? "odd-m" : "even-m");
      if (m < 4 || n < 4) return {not_applicable(c)};
      return {equality(c, nu_path_drawing(m, n), path_components(m, n).total)};
    });
  } else if (id == "3.1") {
    g.per_m([id](int m) -> Cells {
      Cells out;
      for (int l = 1; l <= 3; ++l) {
        auto c = make(id, m, std::nullopt, l, "formula-vs-bruteforce");
        if (m < 2 || (l == 3 && m % 2 == 1)) {
          out.push_back(not_applicable(c));
          continue;
        }
        const auto f = base_permutation(l, m);
        out.push_back(equality(c, sector_crossings_formula(f), sector_crossings_bruteforce(f)));
      }
      return out;
    });
    g.per_mn([id, &o](int m, int n) -> Cells {
      if (!large_m(m, n)) return {};
      Cells out;
      for (int l = 4; l <= 8; ++l) {
        auto c = make(id, m, n, l, "formula-vs-bruteforce");
        if (!is_admissible(l, m, n)) {
          out.push_back(not_applicable(c));
          continue;
        }
        const auto f = extended_permutation(l, m, n, o.clauses);
        out.push_back(equality(c, sector_crossings_formula(f), sector_crossings_bruteforce(f)));
      }
      return out;
    });
  } else if (id == "3.2" || id == "3.3" || id == "3.4" || id == "3.5") {
    const int l = id == "3.2" ? 1 : (id == "3.5" ? 3 : 2);
    const int need = id == "3.3" ? 1 : ((id == "3.4" || id == "3.5") ? 0 : -1);  // parity of m, -1 = any
    g.per_m([id, l, need](int m) -> Cells {
      auto c = make(id, m, std::nullopt, l, need < 0 ? "any-m" : (need == 1 ? "odd-m" : "even-m"));
      if (m < 2 || (need >= 0 && m % 2 != need)) return {not_applicable(c)};
      return {equality(c, nu_layer_closed(l, m), sector_crossings_bruteforce(base_permutation(l, m)))};
    });
  } else if (id == "3.6" || id == "3.7" || id == "3.12") {
    g.per_mn([id, &o](int m, int n) -> Cells {
      const bool applies = id == "3.6"   ? (m >= 4 && n >= 4 && n % 2 == 0)
                           : id == "3.7" ? (m >= 4 && n % 2 == 1 && n >= 3 && m <= n)
                                         : (m >= 4 && large_m(m, n));
      if (!applies) return {not_applicable(make(id, m, n, std::nullopt, "outside"))};
      const BranchValue bv = nu_cycle_drawing_branch(m, n, o.sign);
      std::string branch = to_string(bv.branch);
      if (id == "3.12") branch += "/" + to_string(o.sign);
      return {equality(make(id, m, n, std::nullopt, branch), bv.value,
                       schedule_total(m, n, o.alternation, o.clauses))};
    });
  } else if (id == "3.8" || id == "3.9" || id == "3.10" || id == "3.11") {
    g.per_mn([id, &o](int m, int n) -> Cells {
      if (!large_m(m, n)) return {not_applicable(make(id, m, n, std::nullopt, "outside"))};
      Cells out;
      for (int l = 4; l <= 8; ++l) {
        if (!is_admissible(l, m, n)) {
          out.push_back(not_applicable(make(id, m, n, l, "inadmissible")));
          continue;
        }
        if (id != "3.8" && !scheduled(l, m, n)) {
          out.push_back(not_applicable(make(id, m, n, l, "unscheduled")));
          continue;
        }
        const FPartialSums ps = partial_sums(l, m, n, o.clauses);
        if (id == "3.8") {
          const auto f = extended_permutation(l, m, n, o.clauses);
          const std::int64_t c2 = choose2(m);
          out.push_back(equality(make(id, m, n, l, "partial-sums-vs-bruteforce"), ExactValue(c2 * c2 - ps.total()),
                                 sector_crossings_bruteforce(f)));
        } else if (id == "3.9") {
          for (const auto& [variant, value] : printed_F1(m, n)) {
            out.push_back(equality(make(id, m, n, l, "F1/" + variant), value, ps.F1));
          }
        } else if (id == "3.10") {
          out.push_back(equality(make(id, m, n, l, "F2"), printed_F2(l, m, n), ps.F2));
        } else {
          const auto variants = printed_F3(l, m, n);
          if (variants.empty()) out.push_back(not_applicable(make(id, m, n, l, "F3/no-expression")));
          for (const auto& [variant, value] : variants) {
            out.push_back(equality(make(id, m, n, l, "F3/" + variant), value, ps.F3));
          }
        }
      }
      return out;
    });
  } else if (id == "3.13") {
    g.per_mn([id, &o](int m, int n) -> Cells {
      if (n != 3 || m < 4) return {not_applicable(make(id, m, n, std::nullopt, "outside"))};
      const ExactValue exact = nu_cycle_drawing(m, 3, o.sign);
      Cells out{at_most(make(id, m, n, std::nullopt, "stated-bound(<=)"), n3_stated_bound(m), exact)};
      if (m % 3 == 1) out.push_back(equality(make(id, m, n, std::nullopt, "s1-derivation(=)"), n3_s1_derivation(m), exact));
      return out;
    });
  } else if (id == "3.14") {
    g.per_mn([id, &o](int m, int n) -> Cells {
      if (n < 5 || !large_m(m, n)) return {not_applicable(make(id, m, n, std::nullopt, "outside"))};
      return {at_most(make(id, m, n, std::nullopt, "relaxed-bound(<=)"), odd_n_relaxed_bound(m, n),
                      nu_cycle_drawing(m, n, o.sign))};
    });
  } else if (id == "4.1" || id == "4.2") {
    g.per_m([id](int m) -> Cells {
      auto c = make(id, m, std::nullopt, std::nullopt, "formula-vs-pipeline");
      if (m < 4) return {not_applicable(c)};
      return {id == "4.1" ? equality(c, lb_kmm_minus_matching(m), lb_kmm_minus_matching_pipeline(m))
                          : equality(c, lb_km2m(m), lb_km2m_pipeline(m))};
    });
  } else {
    throw std::invalid_argument("unknown lemma id '" + id + "'");
  }
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

VerificationReport verify_sweep(const VerifyOptions& options) {
  if (options.m_lo > options.m_hi || options.n_lo > options.n_hi) {
    throw std::invalid_argument("verify_sweep: empty parameter range");
  }
  std::vector<std::string> ids;
  for (const auto& id : options.lemmas) {
    if (id == "all") {
      ids = verifiable_lemmas();
      break;
    }
    if (std::find(verifiable_lemmas().begin(), verifiable_lemmas().end(), id) == verifiable_lemmas().end()) {
      throw std::invalid_argument("unknown lemma id '" + id + "'");
    }
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  if (ids.empty()) throw std::invalid_argument("verify_sweep: no lemma selected");

  Grid grid{options, {}};
  for (const auto& id : ids) add_lemma(grid, id);

  std::vector<Cells> results(grid.tasks.size());
  std::vector<std::exception_ptr> errors(grid.tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.tasks.size(); i = next++) {
      try {
        results[i] = grid.tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, options.threads > 0 ? options.threads : default_thread_count());
  std::vector<std::thread> pool;
  for (int t = 1; t < threads && static_cast<std::size_t>(t) < grid.tasks.size(); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationReport report;
  report.lemmas = ids;
  report.m_lo = options.m_lo;
  report.m_hi = options.m_hi;
  report.n_lo = options.n_lo;
  report.n_hi = options.n_hi;
  for (auto& r : results) {
    for (auto& c : r) report.cells.push_back(std::move(c));
  }
  // tasks are queued lemma by lemma, per-m before per-(m, n); sort within a lemma
  std::stable_sort(report.cells.begin(), report.cells.end(), [&](const auto& a, const auto& b) {
    const auto ia = std::find(ids.begin(), ids.end(), a.lemma) - ids.begin();
    const auto ib = std::find(ids.begin(), ids.end(), b.lemma) - ids.begin();
    if (ia != ib) return ia < ib;
    if (a.m != b.m) return a.m < b.m;
    return a.n.value_or(-1) < b.n.value_or(-1);
  });
  return report;
}

std::size_t VerificationReport::count(CellStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const auto& c) { return c.status == status; }));
}

std::vector<DiscrepancyRecord> VerificationReport::discrepancies() const {
  std::vector<DiscrepancyRecord> out;
  for (const auto& c : cells) {
    if (c.status != CellStatus::Mismatch) continue;
    DiscrepancyRecord d;
    d.lemma = c.lemma;
    d.params["m"] = c.m;
    if (c.n) d.params["n"] = *c.n;
    if (c.l) d.params["l"] = *c.l;
    d.printed = *c.printed;
    d.computed = *c.computed;
    out.push_back(std::move(d));
  }
  return out;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "lemma,m,n,l,branch,printed,computed,status\n";
  for (const auto& c : cells) {
    os << c.lemma << ',' << c.m << ',' << opt(c.n) << ',' << opt(c.l) << ',' << c.branch << ','
       << (c.printed ? c.printed->to_string() : "") << ',' << (c.computed ? c.computed->to_string() : "") << ','
       << to_string(c.status) << '\n';
  }
  return os.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["lemmas"] = lemmas;
  j["m_range"] = {m_lo, m_hi};
  j["n_range"] = {n_lo, n_hi};
  j["summary"] = {{"match", count(CellStatus::Match)},
                  {"mismatch", count(CellStatus::Mismatch)},
                  {"not_applicable", count(CellStatus::NotApplicable)}};
  auto& arr = j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json e;
    e["lemma"] = c.lemma;
    e["m"] = c.m;
    e["n"] = c.n ? nlohmann::ordered_json(*c.n) : nlohmann::ordered_json(nullptr);
    e["l"] = c.l ? nlohmann::ordered_json(*c.l) : nlohmann::ordered_json(nullptr);
    e["branch"] = c.branch;
    e["printed"] = c.printed ? nlohmann::ordered_json(c.printed->to_string()) : nlohmann::ordered_json(nullptr);
    e["computed"] = c.computed ? nlohmann::ordered_json(c.computed->to_string()) : nlohmann::ordered_json(nullptr);
    e["status"] = to_string(c.status);
    arr.push_back(std::move(e));
  }
  return j;
}

}  // namespace crossforge
