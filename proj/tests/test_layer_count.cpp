#include <gtest/gtest.h>

#include "crossforge/layer_count.hpp"
#include "crossforge/schedules.hpp"

using namespace crossforge;

TEST(Sector, Examples) {
  EXPECT_EQ(sector_crossings_bruteforce(base_permutation(1, 4)), 14);
  EXPECT_EQ(sector_crossings_bruteforce(LayerPermutation::identity(4)), 28);
  EXPECT_EQ(sector_crossings_bruteforce(LayerPermutation({1, 0})), 0);
  EXPECT_EQ(sector_crossings_formula(base_permutation(1, 4)), 14);
  EXPECT_EQ(sector_crossings_formula(base_permutation(2, 5)), 52);
  EXPECT_EQ(sector_crossings_formula(LayerPermutation::identity(4)), 28);
}

TEST(Sector, ModelShape) {
  const SectorModel model{base_permutation(2, 6)};
  const auto edges = model.edges();
  EXPECT_EQ(edges.size(), 30u);
  for (const auto& [a, b] : edges) EXPECT_NE(model.matching(a), b);
}

TEST(Sector, FormulaMatchesBruteForceForAllFamilies) {
  for (int m = 4; m <= 12; ++m) {
    for (int l = 1; l <= 3; ++l) {
      if (!is_admissible(l, m, 3)) continue;
      const auto f = base_permutation(l, m);
      EXPECT_EQ(sector_crossings_formula(f), sector_crossings_bruteforce(f));
    }
    for (int n = 3; n < m; n += 2) {
      for (int l = 4; l <= 8; ++l) {
        if (!is_admissible(l, m, n)) continue;
        const auto f = extended_permutation(l, m, n);
        EXPECT_EQ(sector_crossings_formula(f), sector_crossings_bruteforce(f)) << l << " " << m << " " << n;
      }
    }
  }
}

TEST(PartialSums, PartitionAndIdentity) {
  for (int m = 4; m <= 15; ++m) {
    for (int n = 3; n < m; n += 2) {
      for (int l = 4; l <= 8; ++l) {
        if (!is_admissible(l, m, n)) continue;
        const auto ps = partial_sums(l, m, n);
        EXPECT_EQ(ps.S1.size() + ps.S2.size() + ps.S3.size(), static_cast<std::size_t>(m));
        const auto f = extended_permutation(l, m, n);
        std::int64_t all = 0;
        for (int t = 0; t < m; ++t) all += sector_summand(m, t, f(t));
        EXPECT_EQ(ps.total(), all - inversion_number(f));
        const std::int64_t c2 = choose2(m);
        EXPECT_EQ(c2 * c2 - ps.total(), sector_crossings_formula(f));
      }
    }
  }
}

TEST(PartialSums, BruteForceExample) {
  const auto ps = partial_sums(4, 7, 3);
  EXPECT_EQ(21 * 21 - ps.total(), sector_crossings_bruteforce(extended_permutation(4, 7, 3)));
}

TEST(Annulus, UnidirectionalMatchesClosedForm) {
  EXPECT_EQ(annulus_crossings(4), 4);
  EXPECT_EQ(annulus_crossings(5), 20);
  EXPECT_EQ(annulus_crossings(6), 60);
  for (int m = 4; m <= 12; ++m) {
    EXPECT_EQ(annulus_crossings(m), static_cast<std::int64_t>(m) * (m - 1) * (m - 2) * (m - 3) / 6);
  }
}

TEST(Annulus, ShortestHelixDoesNotReproduce) {
  EXPECT_NE(annulus_crossings(4, WindingRule::ShortestTiePositive), 4);
  EXPECT_NE(annulus_crossings(5, WindingRule::ShortestTiePositive), 20);
}

TEST(Annulus, HelixCrossingCount) {
  // displacement difference of one full turn crosses once
  EXPECT_EQ(helix_crossings(0, 4, 1, 0, 4), 1);
  EXPECT_EQ(helix_crossings(0, 1, 0, 2, 4), 0);
  EXPECT_EQ(helix_displacement(3, 1, 4), 2);
  EXPECT_EQ(helix_displacement(0, 3, 4, WindingRule::ShortestTiePositive), -1);
}

TEST(Discrepancy, JsonLine) {
  DiscrepancyRecord d{"3.9", {{"m", 5}, {"n", 3}}, ExactValue(10), ExactValue(12)};
  EXPECT_EQ(d.to_json_line(), R"({"lemma":"3.9","params":{"m":5,"n":3},"printed":"10","computed":"12"})");
}
