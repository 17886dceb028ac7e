#include "crossforge/schedules.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "crossforge/exact.hpp"

namespace crossforge {

ScheduleParams ScheduleParams::compute(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("ScheduleParams: m and n must be positive");
  ScheduleParams p;
  p.m = m;
  p.n = n;
  p.r = m / n;
  p.s = m % n;
  p.s0 = (n - 1) / 2;
  p.s1 = p.s / 2;
  return p;
}

namespace {

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

}  // namespace

std::string to_string(ClauseReading reading) {
  return reading == ClauseReading::Repaired ? "repaired" : "as-printed";
}

ClauseReading parse_clause_reading(const std::string& text) {
  const std::string t = lower(text);
  if (t == "repaired") return ClauseReading::Repaired;
  if (t == "as-printed" || t == "asprinted" || t == "printed") return ClauseReading::AsPrinted;
  throw std::invalid_argument("unknown clause reading '" + text + "' (expected repaired or as-printed)");
}

std::string to_string(AlternationReading reading) {
  return reading == AlternationReading::LayerParity ? "layer-parity" : "block-offset";
}

AlternationReading parse_alternation_reading(const std::string& text) {
  const std::string t = lower(text);
  if (t == "layer-parity" || t == "parity") return AlternationReading::LayerParity;
  if (t == "block-offset" || t == "offset") return AlternationReading::BlockOffset;
  throw std::invalid_argument("unknown alternation reading '" + text +
                              "' (expected layer-parity or block-offset)");
}

LayerPermutation base_permutation(int l, int m) {
  if (m < 2) throw std::invalid_argument("base_permutation: m must be >= 2");
  std::vector<int> v(static_cast<std::size_t>(m));
  switch (l) {
    case 1:
      for (int t = 0; t < m; ++t) v[static_cast<std::size_t>(t)] = m - 1 - t;
      break;
    case 2:
      v[0] = m - 1;
      for (int t = 1; t <= m - 2; ++t) v[static_cast<std::size_t>(t)] = m - 1 - t + minus_one_pow(t);
      v[static_cast<std::size_t>(m - 1)] = parity(m);
      break;
    case 3:
      for (int t = 0; t < m; ++t) v[static_cast<std::size_t>(t)] = m - 1 - t - minus_one_pow(t);
      break;
    default:
      throw std::invalid_argument("base_permutation: family must be 1, 2 or 3");
  }
  return LayerPermutation(std::move(v), PermutationLabel{l, m, 0});
}

namespace {

/// Collects clause assignments and rejects any index defined twice.
class ClauseBuilder {
 public:
  ClauseBuilder(int family, int m) : family_(family), value_(static_cast<std::size_t>(m)),
                                     clause_(static_cast<std::size_t>(m)) {}

  void put(int t, int value, const std::string& clause) {
    const int m = static_cast<int>(value_.size());
    if (t < 0 || t >= m) {
      throw ClauseError(ClauseError::Kind::Uncovered, family_, t, {clause},
                        "f" + std::to_string(family_) + ": clause " + clause + " targets index " +
                            std::to_string(t) + " outside [0, " + std::to_string(m) + ")");
    }
    auto& slot = clause_[static_cast<std::size_t>(t)];
    if (slot) {
      throw ClauseError(ClauseError::Kind::DoublyDefined, family_, t, {*slot, clause},
                        "f" + std::to_string(family_) + ": doubly-defined index " + std::to_string(t) +
                            " (clauses " + *slot + " -> " +
                            std::to_string(value_[static_cast<std::size_t>(t)]) + " and " + clause +
                            " -> " + std::to_string(value) + ")");
    }
    slot = clause;
    value_[static_cast<std::size_t>(t)] = value;
  }

  ClauseTrace finish(int m, int n) {
    for (std::size_t t = 0; t < clause_.size(); ++t) {
      if (!clause_[t]) {
        throw ClauseError(ClauseError::Kind::Uncovered, family_, static_cast<int>(t), {},
                          "f" + std::to_string(family_) + ": uncovered index " + std::to_string(t) +
                              " at m=" + std::to_string(m) + ", n=" + std::to_string(n));
      }
    }
    std::vector<std::string> ids;
    ids.reserve(clause_.size());
    for (auto& c : clause_) ids.push_back(*c);
    try {
      LayerPermutation p(value_, PermutationLabel{family_, m, n});
      return ClauseTrace{std::move(p), std::move(ids)};
    } catch (const NotABijection& e) {
      const auto t = static_cast<std::size_t>(e.index());
      std::vector<std::string> involved{ids[t]};
      for (std::size_t u = 0; u < t; ++u) {
        if (value_[u] == value_[t]) involved.insert(involved.begin(), ids[u]);
      }
      throw ClauseError(ClauseError::Kind::NotBijection, family_, e.index(), involved,
                        "f" + std::to_string(family_) + ": " + e.what() + " at m=" +
                            std::to_string(m) + ", n=" + std::to_string(n));
    }
  }

 private:
  int family_;
  std::vector<int> value_;
  std::vector<std::optional<std::string>> clause_;
};

struct Clauses {
  const ScheduleParams& p;
  ClauseBuilder& b;
  bool repaired;

  int m() const { return p.m; }

  void f4_head() {
    const int s0 = p.s0;
    for (int d = 0; d < p.r; ++d) b.put(d * s0, p.m - d * s0 - 2 + parity(s0), "f4.1");
    if (p.n >= 5) {
      // Printed range starts at t = 0, which collides with f4.1.
      for (int d = 0; d < p.r; ++d) {
        for (int t = repaired ? 1 : 0; t <= s0 - 1; ++t) {
          b.put(t + d * s0, p.m - d * s0 - t - 1 - minus_one_pow(t + s0), "f4.2");
        }
      }
    }
  }

  // Zig-zag runs and end points of the tail; shared by f4, f7 and f8.
  void tail_runs(const std::string& run_id, const std::string& end_id, bool guard_n5) {
    const int s0 = p.s0;
    if (guard_n5 && p.n < 5) return;
    for (int d = 0; d < p.r; ++d) {
      const int sign_base = repaired ? p.m : p.r;
      for (int t = p.m - d * s0 - s0 + 1; t <= p.m - d * s0 - 2; ++t) {
        b.put(t, p.m - t - 1 + minus_one_pow(t + sign_base + s0 + s0 * d), run_id);
      }
      b.put(p.m - d * s0 - 1, d * s0 + parity(s0), end_id);
    }
  }

  void f4_tail() {
    for (int d = 0; d < p.r; ++d) b.put(p.m - (d + 1) * p.s0, p.R() + p.s1 + d, "f4.13");
    tail_runs("f4.14", "f4.15", true);
  }

  void f4_middle() {
    const int R = p.R(), s = p.s, s1 = p.s1, r = p.r, M = p.m;
    const bool even = s % 2 == 0;
    if (s >= 2) b.put(R, R + s + r - 2 + parity(s1), "f4.3");
    if (s >= 4) {
      for (int t = R + 1; t <= R + s1 - 1; ++t) b.put(t, M - t - 1 - minus_one_pow(t + s1 + R), "f4.4");
    }
    for (int d = 0; d < r; ++d) b.put(R + s1 + d, (d + 1) * p.s0 - 1, "f4.5");
    if (even && s >= 4) {
      for (int t = R + s1 + r; t <= R + s + r - 2; ++t) {
        b.put(t, M - t - 1 - minus_one_pow(t + s1 + r + R), "f4.6");
      }
    }
    if (even && s >= 2) b.put(R + s + r - 1, R + 1 - parity(s1), "f4.7");
    if (s == 1) b.put(R + r, R + r, "f4.8");
    if (!even && s >= 3) {
      b.put(R + s1 + r, R + s1 - 1, "f4.9");
      b.put(R + s1 + r + 1, R + s1 + r, "f4.10");
    }
    if (!even && s >= 7) {
      for (int t = R + s1 + r + 2; t <= R + s + r - 2; ++t) {
        b.put(t, M - t - 1 - minus_one_pow(t + s1 + r + R), "f4.11");
      }
    }
    if (!even && s >= 5) b.put(R + s + r - 1, (repaired ? R : R + s1) + parity(s1), "f4.12");
  }

  void f5_middle() {
    const int R = p.R(), s = p.s, s1 = p.s1, r = p.r, M = p.m;
    if (s >= 4) b.put(R, R + s + r - 1 - parity(s1), "f5.2");
    if (s >= 6) {
      for (int t = R + 1; t <= R + s1 - 2; ++t) b.put(t, M - t - 1 + minus_one_pow(R + s1 + t), "f5.3");
    }
    if (s >= 2) b.put(R + s1 - 1, R + s1 - 1, "f5.4");
    for (int d = 0; d < r; ++d) b.put(R + s1 + d, (d + 1) * p.s0 - 1, "f5.5");
    if (s >= 2) b.put(R + s1 + r, R + s1 + r, "f5.6");
    if (s >= 6) {
      const int sign = repaired ? 1 : -1;
      for (int t = R + s1 + r + 1; t <= R + s + r - 2; ++t) {
        b.put(t, M - t - 1 + sign * minus_one_pow(t + s1 + r + R), "f5.7");
      }
    }
    if (s >= 4) b.put(R + s + r - 1, R + parity(s1), "f5.8");
  }

  // f6 and f8 share this middle; the shift is printed for f6 only.
  void f68_middle(const std::string& fam, int shift) {
    const int R = p.R(), s = p.s, s1 = p.s1, r = p.r, M = p.m;
    if (s >= 1) b.put(R, R + s + r - 1, fam + ".2");
    if (s >= 3) {
      for (int t = R + 1; t <= R + s1 - 1 + shift; ++t) b.put(t, M - t - 1, fam + ".3");
    }
    for (int d = 0; d < r; ++d) b.put(R + s1 + d + shift, (d + 1) * p.s0 - 1, fam + ".4");
    if (s >= 2) {
      for (int t = R + s1 + r + shift; t <= R + s + r - 1; ++t) b.put(t, M - t - 1, fam + ".5");
    }
  }

  void f7_middle() {
    const int R = p.R(), s = p.s, s1 = p.s1, r = p.r, M = p.m;
    if (s >= 3) b.put(R, R + s + r - 1, "f7.2");
    if (s >= 5) {
      for (int t = R + 1; t <= R + s1 - 1; ++t) b.put(t, M - t - 1, "f7.3");
    }
    for (int d = 0; d < r; ++d) b.put(R + d + s1, (d + 1) * p.s0 - 1, "f7.4");
    for (int t = R + s1 + r; t <= R + s + r - 1; ++t) b.put(t, M - t - 1, "f7.5");
  }

  void f78_tail(int l) {
    const std::string fam = "f" + std::to_string(l);
    const int offset = (l == 8 && repaired) ? 0 : 1;
    for (int d = 0; d < p.r; ++d) b.put(p.m - (d + 1) * p.s0, p.R() + p.s1 + d + offset, fam + ".6");
    tail_runs(fam + ".7", fam + ".8", repaired);
  }
};

}  // namespace

ClauseTrace extended_permutation_trace(int l, int m, int n, ClauseReading reading) {
  if (l < 4 || l > 8) throw std::invalid_argument("extended_permutation: family must be in 4..8");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("extended_permutation: n must be odd and >= 3");
  if (m <= n) throw std::invalid_argument("extended_permutation: requires m > n");
  const ScheduleParams p = ScheduleParams::compute(m, n);
  ClauseBuilder b(l, m);
  Clauses c{p, b, reading == ClauseReading::Repaired};

  c.f4_head();
  switch (l) {
    case 4:
      c.f4_middle();
      c.f4_tail();
      break;
    case 5:
      c.f4_tail();
      c.f5_middle();
      break;
    case 6:
      c.f4_tail();
      c.f68_middle("f6", parity(p.s));
      break;
    case 7:
      // As printed, f7 also inherits f4's tail, which its own tail clauses redefine.
      if (!c.repaired) c.f4_tail();
      c.f7_middle();
      c.f78_tail(7);
      break;
    case 8:
      c.f68_middle("f8", c.repaired ? parity(p.s) : 0);
      c.f78_tail(8);
      break;
  }
  return b.finish(m, n);
}

LayerPermutation extended_permutation(int l, int m, int n, ClauseReading reading) {
  return extended_permutation_trace(l, m, n, reading).permutation;
}

bool is_admissible(int l, int m, int n) {
  switch (l) {
    case 1:
    case 2:
      return m >= 2;
    case 3:
      return m >= 2 && m % 2 == 0;
    default:
      break;
  }
  if (l < 4 || l > 8 || n < 3 || n % 2 == 0 || m <= n) return false;
  const int s = m % n;
  if (l == 5) return s % 2 == 0;
  if (l == 7) return s % 2 == 1;
  return true;
}

std::vector<int> ScheduleAssignment::families() const {
  std::vector<int> out;
  out.reserve(per_layer.size());
  for (const auto& p : per_layer) out.push_back(p.label().family);
  return out;
}

ScheduleAssignment schedule_for(int m, int n, Family family, AlternationReading alternation,
                                ClauseReading clauses) {
  if (family != Family::Cycle) {
    throw std::invalid_argument("schedule_for: only cycle drawings are schedule-driven");
  }
  if (m < 4) throw std::invalid_argument("schedule_for: m must be >= 4");
  if (n < 3) throw std::invalid_argument("schedule_for: n must be >= 3");

  ScheduleAssignment out{m, n, family, {}};
  out.per_layer.reserve(static_cast<std::size_t>(n));

  if (n % 2 == 0) {
    const auto f1 = base_permutation(1, m);
    out.per_layer.assign(static_cast<std::size_t>(n), f1);
    return out;
  }

  if (m <= n) {
    const auto f1 = base_permutation(1, m);
    const auto f2 = base_permutation(2, m);
    for (int j = 0; j < n; ++j) {
      if (j >= m) {
        out.per_layer.push_back(f1);
      } else if (m % 2 == 1) {
        out.per_layer.push_back(f2);
      } else {
        out.per_layer.push_back(j % 2 == 0 ? base_permutation(3, m) : f2);
      }
    }
    return out;
  }

  const int s = m % n;
  const bool parity_reading = alternation == AlternationReading::LayerParity;
  auto fam = [&](int l) { return extended_permutation(l, m, n, clauses); };
  for (int j = 0; j < n; ++j) {
    int l = 0;
    if (s % 2 == 0) {
      if (j < s) {
        l = parity_reading ? (j % 2 == 0 ? 4 : 5) : (j % 2 == 0 ? 5 : 4);
      } else {
        l = 6;
      }
    } else if (j < s) {
      l = 4;
    } else {
      l = parity_reading ? (j % 2 == 0 ? 8 : 7) : ((j - s) % 2 == 0 ? 8 : 7);
    }
    out.per_layer.push_back(fam(l));
  }
  return out;
}

std::vector<std::vector<int>> column_contents(const ScheduleAssignment& schedule) {
  const int m = schedule.m;
  const int columns = static_cast<int>(schedule.per_layer.size());
  std::vector<std::vector<int>> contents(static_cast<std::size_t>(columns),
                                         std::vector<int>(static_cast<std::size_t>(m)));
  for (int t = 0; t < m; ++t) contents[0][static_cast<std::size_t>(t)] = t;
  for (int j = 1; j < columns; ++j) {
    const auto& f = schedule.per_layer[static_cast<std::size_t>(j)];
    for (int t = 0; t < m; ++t) {
      contents[static_cast<std::size_t>(j)][static_cast<std::size_t>(f(t))] =
          contents[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)];
    }
  }
  return contents;
}

bool schedule_closes(const ScheduleAssignment& schedule) {
  if (schedule.per_layer.empty()) return true;
  const auto contents = column_contents(schedule);
  const auto& last = contents.back();
  const auto& f0 = schedule.per_layer.front();
  for (int t = 0; t < schedule.m; ++t) {
    if (last[static_cast<std::size_t>(t)] != contents[0][static_cast<std::size_t>(f0(t))]) return false;
  }
  return true;
}

}  // namespace crossforge
