#include <gtest/gtest.h>

#include <set>

#include "crossforge/closed_forms.hpp"
#include "crossforge/lower_bounds.hpp"

using namespace crossforge;

TEST(Arrangements, Enumeration) {
  EXPECT_EQ(enumerate_arrangements(3, 0), (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(enumerate_arrangements(4, 2).size(), 6u);
  for (int i = 0; i < 5; ++i) {
    const auto arr = enumerate_arrangements(5, i);
    const std::set<std::pair<int, int>> unique(arr.begin(), arr.end());
    EXPECT_EQ(unique.size(), arr.size());
    EXPECT_EQ(arr.size(), 12u);
    for (const auto& [a, b] : arr) {
      EXPECT_NE(a, b);
      EXPECT_NE(a, i);
      EXPECT_NE(b, i);
    }
  }
}

TEST(Embedding, DetourRoute) {
  const auto e = build_embedding_kmm(4);
  const auto first = enumerate_arrangements(4, 0).front();
  bool found = false;
  for (const auto& r : e.routes) {
    if (r.from == PartVertex{0, 0} && r.to == PartVertex{1, 0} && r.copy == 1) {
      EXPECT_EQ(r.path, (std::vector<PartVertex>{{0, 0}, {1, first.first}, {0, first.second}, {1, 0}}));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Embedding, DirectRoutesPerEdge) {
  const auto e = build_embedding_kmm(4);
  std::map<std::pair<PartVertex, PartVertex>, int> direct;
  for (const auto& r : e.routes) {
    if (r.path.size() == 2) ++direct[{r.from, r.to}];
  }
  EXPECT_EQ(direct.size(), 12u);
  for (const auto& [k, v] : direct) EXPECT_EQ(v, 6);
}

TEST(Embedding, ValidateRejectsBadRoute) {
  auto e = build_trivial_embedding(3);
  e.routes[0].path = {{0, 0}, {0, 1}};
  EXPECT_THROW(e.validate(), std::logic_error);
}

TEST(Congestion, UniformAndConserved) {
  for (int m = 4; m <= 12; ++m) {
    for (const auto& e : {build_embedding_kmm(m), build_embedding_km2m(m)}) {
      const auto rep = congestion(e);
      EXPECT_TRUE(rep.uniform());
      EXPECT_EQ(rep.max, static_cast<std::int64_t>(m - 2) * (m + 2));
      EXPECT_EQ(rep.sum(), rep.total_route_length);
    }
  }
  const auto t = congestion(build_trivial_embedding(3));
  EXPECT_EQ(t.max, 1);
  EXPECT_TRUE(t.uniform());
}

TEST(Bounds, KmnLower) {
  EXPECT_EQ(kmn_lower(4, 4), ExactValue::fraction(4297, 1250));
  EXPECT_EQ(kmn_lower(1, 9), ExactValue(0));
  EXPECT_EQ(kmn_lower(5, 5), ExactValue::fraction(4297 * 16, 5000));
  EXPECT_EQ(multigraph_scale(6, ExactValue(4)), ExactValue(144));
}

TEST(Bounds, Leighton) {
  EXPECT_EQ(leighton_bound(ExactValue(0), 3, 8, 3), ExactValue(-36));
  EXPECT_THROW(leighton_bound(ExactValue(1), 0, 8, 3), std::invalid_argument);
}

TEST(Bounds, FormulaEqualsPipeline) {
  for (int m = 4; m <= 16; ++m) {
    EXPECT_EQ(lb_kmm_minus_matching(m), lb_kmm_minus_matching_pipeline(m)) << m;
    EXPECT_EQ(lb_km2m(m), lb_km2m_pipeline(m)) << m;
  }
}

TEST(Bounds, SignChanges) {
  EXPECT_LT(lb_kmm_minus_matching(4), ExactValue(0));
  int first = 0;
  for (int m = 4; m <= 40 && first == 0; ++m) {
    if (lb_kmm_minus_matching(m) > ExactValue(0)) first = m;
  }
  EXPECT_EQ(first, 26);
  // 4297/5000 * (29/32)^2 * 15^2 * 14^2 - 30 * 29^2
  EXPECT_EQ(lb_kmm_minus_matching(30),
            ExactValue::fraction(4297, 5000) * ExactValue::fraction(841, 1024) * ExactValue(44100) - ExactValue(25230));
  EXPECT_EQ(lb_kmm_minus_matching(30).to_decimal(2), "5896.48");
}

TEST(Bounds, FamilyCombinations) {
  const auto p = lower_bound_path(6, 4);
  EXPECT_LT(p.raw, ExactValue(0));
  EXPECT_EQ(p.clamped, ExactValue(0));
  const auto c = lower_bound_cycle(30, 5);
  EXPECT_EQ(c.raw, ExactValue(2) * lb_km2m(30) + lb_kmm_minus_matching(30));
  EXPECT_EQ(c.clamped, c.raw.clamped_non_negative());
}

namespace {

bool clamped_monotone_in_n(int m) {
  for (Family f : {Family::Path, Family::Cycle}) {
    for (int n = (f == Family::Path ? 2 : 3); n < 40; ++n) {
      if (lower_bound(f, m, n).clamped > lower_bound(f, m, n + 1).clamped) return false;
    }
  }
  return true;
}

}  // namespace

// Nondecreasing in n fails while lb_km2m(m) < lb_kmm_minus_matching(m): the
// even -> odd step trades one K_{m,m} - mK_2 term for a smaller K_{m,2m} one.
TEST(Bounds, ClampedMonotoneInNExceptKnownWindow) {
  for (int m = 4; m <= 60; ++m) {
    const bool in_window = m >= 26 && m <= 37;
    EXPECT_EQ(clamped_monotone_in_n(m), !in_window) << m;
    EXPECT_EQ(lb_km2m(m) < lb_kmm_minus_matching(m), m <= 37) << m;
  }
}

TEST(Bounds, LowerNeverExceedsUpper) {
  for (int m = 4; m <= 40; ++m) {
    for (int n = 3; n <= 9; ++n) {
      EXPECT_LE(lower_bound_cycle(m, n).clamped, upper_bound_cycle(m, n));
      if (n >= 4) EXPECT_LE(lower_bound_path(m, n).clamped, upper_bound_path(m, n));
    }
  }
}
