#include "crossforge/closed_forms.hpp"

#include <algorithm>
#include <cctype>

#include "crossforge/schedules.hpp"

namespace crossforge {

namespace {

using Q = ExactValue;

Q frac(const Q& num, std::int64_t den) { return num / Q(den); }

Q pow_q(const Q& x, int k) {
  Q out(1);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Q cycle_base(int m, int n) {
  const Q M(m);
  return frac(Q(n) * M * (M - 1) * (M - 2) * (Q(3) * M - 5), 12);
}

PathComponents path_components(int m, int n) {
  require(m >= 4 && n >= 4, "path_components: requires m >= 4 and n >= 4");
  PathComponents c;
  std::int64_t interior = 0;
  for (int j = 0; j <= m - 3; ++j) {
    for (int i = 0; i <= j; ++i) interior += i;
  }
  c.interior = Q(static_cast<std::int64_t>(m) * interior);

  const int lo = m % 2 == 1 ? 2 : 3;
  const int hi = m % 2 == 1 ? (m - 1) / 2 : m / 2;
  std::int64_t savings = 0;
  for (int j = lo; j <= hi; ++j) {
    std::int64_t inner = 0;
    for (int i = lo; i <= j; ++i) inner += i;
    savings += inner - 1;
  }
  c.savings = Q(static_cast<std::int64_t>(m) * savings);
  c.end = c.interior - c.savings;
  c.total = Q(2) * c.end + Q(n - 3) * c.interior;
  return c;
}

Q nu_path_drawing(int m, int n) {
  require(m >= 4 && n >= 4, "nu_path_drawing: requires m >= 4 and n >= 4");
  const Q M(m);
  const Q lead = frac(Q(n - 1) * M * (M - 1) * (M - 2) * (M - 3), 6);
  if (m % 2 == 1) return lead - frac(M * (M - 3) * (M * M + Q(6) * M - 31), 24);
  return lead - frac(M * (M - 4) * (M * M + Q(10) * M - 48), 24);
}

Q upper_bound_path(int m, int n) {
  if (n == 2 || n == 3) {
    throw DeferredCase("n = 2, 3 deferred: no path construction for short paths");
  }
  require(m >= 1 && n >= 4, "upper_bound_path: requires m >= 1 and n >= 4");
  if (m <= 3) return Q(0);
  return nu_path_drawing(m, n);
}

Q nu_layer_closed(int l, int m) {
  require(m >= 4, "nu_layer_closed: requires m >= 4");
  const Q base = cycle_base(m, 1);
  switch (l) {
    case 1:
      return base;
    case 2:
      return m % 2 == 1 ? base + frac(Q(m - 1), 2) : base + frac(Q(m - 2), 2);
    case 3:
      if (m % 2 == 1) throw std::domain_error("nu_layer_closed: f3 requires even m");
      return base + frac(Q(m), 2);
    default:
      throw std::invalid_argument("nu_layer_closed: family must be 1, 2 or 3");
  }
}

std::string to_string(CycleBranch branch) {
  switch (branch) {
    case CycleBranch::EvenN:
      return "even-n";
    case CycleBranch::SmallOddN:
      return "m<=odd-n";
    case CycleBranch::LargeS1:
      return "m>odd-n;s=1";
    case CycleBranch::LargeSNot1:
      return "m>odd-n;s!=1";
  }
  return "unknown";
}

std::string to_string(SignReading reading) {
  switch (reading) {
    case SignReading::ExponentS:
      return "exponent-m-minus-n-floor";
    case SignReading::ExponentProduct:
      return "exponent-product";
    case SignReading::Literal:
      return "literal";
  }
  return "unknown";
}

SignReading parse_sign_reading(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "exponent-m-minus-n-floor" || t == "exponent-s") return SignReading::ExponentS;
  if (t == "exponent-product") return SignReading::ExponentProduct;
  if (t == "literal") return SignReading::Literal;
  throw std::invalid_argument("unknown sign reading '" + text + "'");
}

Q large_m_closed(int m, int n, SignReading reading) {
  require(n >= 3 && n % 2 == 1 && m > n, "large_m_closed: requires m > odd n >= 3");
  const Q M(m), N(n);
  const int s = m % n;
  const Q base = M * (M - 1) * (M - 2) * (Q(3) * M - 5) * N;
  if (s == 1) {
    const Q k = Q::fraction(m - 1, n);
    const Q num = base + Q(2) * pow_q(M, 3) - Q(3) * M * M * N + M * N * N + Q(4) * M * N - N * N -
                  Q(7) * M - N + 5 + (Q(2) * M * N + Q(4) * M + Q(13) * N + 8) * k * k;
    return frac(num, 12);
  }
  const int qi = m / n;
  const Q q(qi);
  Q sign_term;
  switch (reading) {
    case SignReading::ExponentS:
      sign_term = Q(1) - Q(minus_one_pow(m - n * qi));
      break;
    case SignReading::ExponentProduct:
      sign_term = Q(1) - Q(minus_one_pow(static_cast<std::int64_t>(m - n) * qi));
      break;
    case SignReading::Literal:
      sign_term = Q(1) - Q(minus_one_pow(m - n)) * q;
      break;
  }
  const Q num = base + (Q(2) * pow_q(N, 3) - Q(4) * N * N - Q(8) * N) * pow_q(q, 3) -
                (Q(6) * M * N * N - Q(3) * pow_q(N, 3) - Q(6) * M * N - Q(12) * M + Q(15) * N) * q * q +
                (Q(6) * M * M * N - Q(6) * M * N * N + pow_q(N, 3) - Q(6) * M * N + Q(4) * N * N +
                 Q(24) * M - Q(13) * N + Q(3) * N * sign_term) *
                    q +
                Q(6) * M * M - Q(6) * M;
  return frac(num, 12);
}

BranchValue nu_cycle_drawing_branch(int m, int n, SignReading reading) {
  require(m >= 4 && n >= 3, "nu_cycle_drawing: requires m >= 4 and n >= 3");
  if (n % 2 == 0) return {cycle_base(m, n), CycleBranch::EvenN};
  if (m <= n) return {cycle_base(m, n) + Q(choose2(m)), CycleBranch::SmallOddN};
  return {large_m_closed(m, n, reading), m % n == 1 ? CycleBranch::LargeS1 : CycleBranch::LargeSNot1};
}

Q nu_cycle_drawing(int m, int n, SignReading reading) {
  return nu_cycle_drawing_branch(m, n, reading).value;
}

std::string to_string(UpperBranch branch) {
  switch (branch) {
    case UpperBranch::SmallM:
      return "m<=3";
    case UpperBranch::EvenN:
      return "even-n";
    case UpperBranch::SmallOddN:
      return "m<=odd-n";
    case UpperBranch::NThree:
      return "m>n=3";
    case UpperBranch::OddNAtLeast5:
      return "m>odd-n>=5";
  }
  return "unknown";
}

Q n3_stated_bound(int m) {
  const Q M(m);
  return cycle_base(m, 3) + frac(Q(28) * pow_q(M, 3) - Q(54) * M * M + Q(42) * M + 16, 108);
}

Q n3_s1_derivation(int m) {
  const Q M(m);
  return cycle_base(m, 3) + frac(Q(28) * pow_q(M, 3) - Q(54) * M * M + Q(42) * M - 16, 108);
}

Q odd_n_relaxed_bound(int m, int n) { return cycle_base(m, n) + frac(pow_q(Q(m), 3), 4); }

UpperBound upper_bound_cycle_branch(int m, int n) {
  require(m >= 1 && n >= 3, "upper_bound_cycle: requires m >= 1 and n >= 3");
  if (m <= 3) {
    const SmallCase sc = small_case_values(m, n, Family::Cycle);
    return {sc.value, UpperBranch::SmallM, sc.exact};
  }
  if (n % 2 == 0) return {cycle_base(m, n), UpperBranch::EvenN};
  if (m <= n) return {cycle_base(m, n) + Q(choose2(m)), UpperBranch::SmallOddN};
  if (n == 3) return {n3_stated_bound(m), UpperBranch::NThree};
  return {odd_n_relaxed_bound(m, n), UpperBranch::OddNAtLeast5};
}

Q upper_bound_cycle(int m, int n) { return upper_bound_cycle_branch(m, n).value; }

SmallCase small_case_values(int m, int n, Family family) {
  require(m >= 1 && m <= 3, "small_case_values: requires 1 <= m <= 3");
  if (family == Family::Path) {
    require(n >= 2, "small_case_values: path requires n >= 2");
    return {Q(0), true, "planar"};
  }
  require(n >= 3, "small_case_values: cycle requires n >= 3");
  if (m <= 2) return {Q(0), true, "planar"};
  if (n == 3) return {Q(3), true, "known crossing number"};
  if (n < 9) return {Q(6 * n - 18), false, "upper bound 6n - 18"};
  return {Q(3 * n), false, "upper bound 3n"};
}

std::vector<std::pair<std::string, Q>> printed_F1(int m, int n) {
  const ScheduleParams p = ScheduleParams::compute(m, n);
  const Q M(m), r(p.r), s0(p.s0);
  auto eval = [&](const Q& c) {
    return frac(Q(4) * (Q(2) * pow_q(s0, 3) - s0 * s0) * pow_q(r, 3) -
                    Q(3) * ((Q(4) * M + 2) * s0 * s0 - c * s0 + 1) * r * r +
                    (Q(-2) * s0 * s0 + (Q(12) * M * M - Q(12) * M + 10) * s0 - Q(6) * M * M - 3) * r,
                6);
  };
  return {{"statement", eval(Q(2) * M)}, {"proof", eval(Q(2) * (M + 2))}};
}

Q printed_F2(int l, int m, int n) {
  const ScheduleParams p = ScheduleParams::compute(m, n);
  const Q M(m), r(p.r), s0(p.s0);
  switch (l) {
    case 4:
    case 5:
    case 6:
      return frac(-(Q(2) * s0 - 1) * r * r + (Q(-2) * s0 + Q(2) * M * M - Q(4) * M + 5) * r, 2);
    case 7:
      return frac(r * r + (Q(2) * M * M - Q(6) * M + 3) * r, 2);
    case 8:
      return frac((Q(-4) * s0 + 1) * r * r + (Q(-4) * s0 + Q(2) * M * M - Q(2) * M + 7) * r, 2);
    default:
      throw std::invalid_argument("printed_F2: family must be in 4..8");
  }
}

std::vector<std::pair<std::string, Q>> printed_F3(int l, int m, int n) {
  const ScheduleParams p = ScheduleParams::compute(m, n);
  const Q M(m), r(p.r), s0(p.s0), s1(p.s1);
  const int s = p.s;
  const Q par1(parity(p.s1));
  std::vector<std::pair<std::string, Q>> out;

  // l = 4, even s >= 2; the proof replaces 3*par(s1) by 3.
  auto f4_even = [&](const Q& tail) {
    return frac(Q(12) * s0 * s0 * s1 * r * r + Q(3) * (Q(4) * s0 * s1 * s1 - (Q(4) * M * s0 - 1) * s1) * r +
                    Q(4) * pow_q(s1, 3) - Q(6) * M * s1 * s1 + (Q(6) * M * M - Q(9) * M + 2) * s1 + tail,
                3);
  };
  // l = 4, odd s >= 3; the proof carries an extra s0 in the r^2 coefficient.
  auto f4_odd = [&](const Q& extra) {
    return frac(Q(6) * (Q(2) * s0 * s0 * s1 + s0 * s0 + extra) * r * r +
                    Q(3) * (Q(4) * s0 * s1 * s1 - (Q(4) * (M - 1) * s0 - 3) * s1 - (Q(2) * M - 1) * s0 - M - 1) * r +
                    Q(4) * pow_q(s1, 3) - Q(6) * (M - 1) * s1 * s1 + (Q(6) * M * M - Q(15) * M + 5) * s1 +
                    Q(3) * M * M - Q(6) * M + 3,
                3);
  };

  if (l == 4 && s % 2 == 0 && s >= 2) {
    out.emplace_back("statement", f4_even(Q(3) * par1));
    out.emplace_back("proof", f4_even(Q(3)));
  }
  if (l == 5 && s % 2 == 0 && s >= 2) {
    out.emplace_back(
        "statement",
        frac(Q(12) * (s0 * s0 * s1 - Q(2) * s0 * s0) * r * r +
                 Q(3) * (Q(4) * s0 * s1 * s1 - (Q(4) * (M + 4) * s0 - 1) * s1 + (Q(8) * M + 10) * s0 + 1) * r +
                 Q(4) * pow_q(s1, 3) - Q(6) * (M + 4) * s1 * s1 + (Q(6) * M * M + Q(15) * M + 32) * s1 -
                 (Q(6) * M * M + Q(15) * M) + Q(3) * (Q(1) - par1),
             3));
  }
  if (l == 6 && s % 2 == 0) {
    out.emplace_back("statement",
                     frac(Q(12) * s0 * s0 * s1 * r * r +
                              Q(3) * (Q(4) * s0 * s1 * s1 - (Q(4) * M * s0 - 1) * s1) * r +
                              Q(4) * pow_q(s1, 3) - Q(6) * M * s1 * s1 + (Q(6) * M * M - Q(9) * M + 5) * s1,
                          3));
  }
  if (l == 4 && s == 1) {
    out.emplace_back("statement", Q(-2) * (s0 * s0 + Q(2) * s0 + 1) * r * r +
                                      ((Q(2) * M - 3) * s0 + Q(2) * (M - 1)) * r);
  }
  if (l == 4 && s % 2 == 1 && s >= 3) {
    out.emplace_back("statement", f4_odd(Q(0)));
    out.emplace_back("proof", f4_odd(s0));
  }
  if (l == 7 && s % 2 == 1) {
    out.emplace_back(
        "statement",
        frac(Q(6) * (Q(2) * s0 * s0 * s1 + s0 * s0) * r * r +
                 Q(6) * (Q(2) * s0 * s1 * s1 - Q(2) * (M - 1) * s0 * s1 - (M - 1) * s0) * r +
                 Q(4) * pow_q(s1, 3) - Q(6) * (M - 1) * s1 * s1 + (Q(6) * M * M - Q(12) * M + 8) * s1 +
                 Q(3) * M * M - Q(6) * M + 3,
             3));
    out.emplace_back(
        "proof",
        frac(Q(6) * (Q(2) * s0 * s0 * s1 + s0 * s0) * r * r +
                 Q(3) * (Q(4) * s0 * s1 * s1 - (Q(4) * (M - 1) * s0 - 1) * s1 - (Q(2) * M - 1) * s0 + 1) * r +
                 Q(4) * pow_q(s1, 3) - Q(6) * (M - 1) * s1 * s1 + (Q(6) * M * M - Q(15) * M + 8) * s1 +
                 Q(3) * M * M - Q(6) * M + 3,
             3));
  }
  if (l == 8 && s % 2 == 1) {
    out.emplace_back(
        "statement",
        frac(Q(6) * (Q(2) * s0 * s0 * s1 + s0 * s0) * r * r +
                 Q(3) * (Q(4) * s0 * s1 * s1 - (Q(4) * (M - 1) * s0 - 1) * s1 - (Q(2) * M - 3) * s0) * r +
                 Q(4) * pow_q(s1, 3) - Q(6) * (M - 1) * s1 * s1 + (Q(6) * M * M - Q(15) * M + 14) * s1 +
                 Q(3) * M * M - Q(9) * M + 6,
             3));
  }
  return out;
}

}  // namespace crossforge
