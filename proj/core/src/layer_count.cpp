#include "crossforge/layer_count.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

namespace crossforge {

std::vector<std::pair<int, int>> SectorModel::edges() const {
  const int n = m();
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (matching(a) != b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::int64_t sector_crossings_bruteforce(const SectorModel& model) {
  const auto e = model.edges();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if ((e[i].first - e[j].first) * (e[i].second - e[j].second) < 0) ++count;
    }
  }
  return count;
}

std::int64_t sector_crossings_bruteforce(const LayerPermutation& f) {
  return sector_crossings_bruteforce(SectorModel{f});
}

std::int64_t sector_summand(int m, int t, int ft) {
  return static_cast<std::int64_t>(m - 1 - t) * ft + static_cast<std::int64_t>(t) * (m - 1 - ft);
}

std::int64_t sector_crossings_formula(const LayerPermutation& f) {
  const int m = f.size();
  std::int64_t sum = 0;
  for (int t = 0; t < m; ++t) sum += sector_summand(m, t, f(t));
  const std::int64_t c = choose2(m);
  return c * c - (sum - inversion_number(f));
}

std::array<std::vector<int>, 3> partial_sum_sets(int l, int m, int n) {
  if (l < 4 || l > 8) throw std::invalid_argument("partial_sum_sets: family must be in 4..8");
  const ScheduleParams p = ScheduleParams::compute(m, n);
  const int R = p.R(), r = p.r, s = p.s, s0 = p.s0, s1 = p.s1;

  std::array<std::vector<int>, 3> S;
  for (int i = 0; i < R; ++i) S[0].push_back(i);
  for (int d = r; d >= 1; --d) {
    for (int i = m - d * s0 + 1; i <= m - 1 - (d - 1) * s0; ++i) S[0].push_back(i);
  }
  const int shift = (l == 8 && s % 2 == 1) ? 1 : 0;
  for (int i = R + s1 + shift; i <= R + s1 + r - 1 + shift; ++i) S[1].push_back(i);
  for (int d = r; d >= 1; --d) S[1].push_back(m - d * s0);
  for (int i = R; i <= R + s1 - 1 + shift; ++i) S[2].push_back(i);
  for (int i = R + s1 + r + shift; i <= R + s + r - 1; ++i) S[2].push_back(i);

  std::vector<int> hits(static_cast<std::size_t>(m), 0);
  std::vector<int> overlapping, missing;
  for (const auto& set : S) {
    for (int i : set) {
      if (i < 0 || i >= m) {
        overlapping.push_back(i);
        continue;
      }
      if (++hits[static_cast<std::size_t>(i)] == 2) overlapping.push_back(i);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (hits[static_cast<std::size_t>(i)] == 0) missing.push_back(i);
  }
  if (!overlapping.empty() || !missing.empty()) {
    throw PartitionError("S1, S2, S3 do not partition {0.." + std::to_string(m - 1) + "} for l=" +
                             std::to_string(l) + ", m=" + std::to_string(m) + ", n=" +
                             std::to_string(n),
                         overlapping, missing);
  }
  for (auto& set : S) std::sort(set.begin(), set.end());
  return S;
}

FPartialSums partial_sums(int l, int m, int n, ClauseReading reading) {
  const LayerPermutation f = extended_permutation(l, m, n, reading);
  auto S = partial_sum_sets(l, m, n);

  auto F = [&](const std::vector<int>& set) {
    std::int64_t total = 0;
    for (int t : set) {
      total += sector_summand(m, t, f(t));
      for (int j = t + 1; j < m; ++j) {
        if (f(t) > f(j)) --total;
      }
    }
    return total;
  };

  FPartialSums out;
  out.l = l;
  out.m = m;
  out.n = n;
  out.F1 = F(S[0]);
  out.F2 = F(S[1]);
  out.F3 = F(S[2]);
  out.S1 = std::move(S[0]);
  out.S2 = std::move(S[1]);
  out.S3 = std::move(S[2]);
  return out;
}

std::string to_string(WindingRule rule) {
  switch (rule) {
    case WindingRule::Unidirectional:
      return "unidirectional";
    case WindingRule::ShortestTiePositive:
      return "shortest-tie-positive";
    case WindingRule::ShortestTieSourceParity:
      return "shortest-tie-source-parity";
  }
  return "unknown";
}

WindingRule parse_winding_rule(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "unidirectional") return WindingRule::Unidirectional;
  if (t == "shortest-tie-positive" || t == "shortest") return WindingRule::ShortestTiePositive;
  if (t == "shortest-tie-source-parity") return WindingRule::ShortestTieSourceParity;
  throw std::invalid_argument("unknown winding rule '" + text + "'");
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int helix_displacement(int a, int b, int m, WindingRule rule) {
  if (a == b) throw std::invalid_argument("helix_displacement: endpoints coincide");
  const int forward = ((b - a) % m + m) % m;
  if (rule == WindingRule::Unidirectional) return forward;
  const int half = m / 2;
  int d = forward > half ? forward - m : forward;
  if (m % 2 == 0 && forward == half) {
    d = (rule == WindingRule::ShortestTiePositive || a % 2 == 0) ? half : -half;
  }
  return d;
}

std::int64_t helix_crossings(std::int64_t a1, std::int64_t d1, std::int64_t a2, std::int64_t d2,
                             std::int64_t m) {
  std::int64_t lo = a1 - a2;
  std::int64_t hi = lo + d1 - d2;
  if (lo > hi) std::swap(lo, hi);
  if (hi - lo < 2) return 0;
  // multiples of m in the open interval (lo, hi)
  return floor_div(hi - 1, m) - floor_div(lo, m);
}

std::int64_t annulus_crossings(int m, WindingRule rule) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) e.emplace_back(a, helix_displacement(a, b, m, rule));
    }
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      count += helix_crossings(e[i].first, e[i].second, e[j].first, e[j].second, m);
    }
  }
  return count;
}

std::string DiscrepancyRecord::to_json_line() const {
  nlohmann::ordered_json j;
  j["lemma"] = lemma;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["printed"] = printed.to_string();
  j["computed"] = computed.to_string();
  return j.dump();
}

}  // namespace crossforge
