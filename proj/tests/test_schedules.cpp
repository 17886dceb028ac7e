#include <gtest/gtest.h>

#include "crossforge/layer_count.hpp"
#include "crossforge/schedules.hpp"

using namespace crossforge;

TEST(Params, Compute) {
  const auto p = ScheduleParams::compute(17, 5);
  EXPECT_EQ(p.r, 3);
  EXPECT_EQ(p.s, 2);
  EXPECT_EQ(p.s0, 2);
  EXPECT_EQ(p.s1, 1);
  EXPECT_EQ(p.R(), 6);
  EXPECT_EQ(ScheduleParams::compute(10, 7).s1, 1);  // odd s = 3 -> floor(3/2)
}

TEST(BasePermutations, Examples) {
  EXPECT_EQ(base_permutation(1, 4).to_line(), "3 2 1 0");
  EXPECT_EQ(base_permutation(2, 5).to_line(), "4 2 3 0 1");
  EXPECT_EQ(base_permutation(3, 4).to_line(), "2 3 0 1");
}

TEST(ExtendedPermutations, SmallExamples) {
  EXPECT_EQ(extended_permutation(4, 7, 3).to_line(), "6 5 0 1 4 3 2");
  EXPECT_EQ(extended_permutation(7, 7, 3).to_line(), "6 5 0 1 2 4 3");
  EXPECT_EQ(extended_permutation(8, 7, 3).to_line(), "6 5 4 0 1 3 2");
}

TEST(ExtendedPermutations, HeadSharedWithF4) {
  const auto f4 = extended_permutation(4, 7, 3);
  for (int l : {6, 7, 8}) {
    const auto f = extended_permutation(l, 7, 3);
    for (int t = 0; t < ScheduleParams::compute(7, 3).R(); ++t) EXPECT_EQ(f(t), f4(t)) << "l=" << l;
  }
}

TEST(ExtendedPermutations, BijectiveSweep) {
  for (int m = 4; m <= 30; ++m) {
    for (int l = 1; l <= 3; ++l) {
      if (is_admissible(l, m, 3)) EXPECT_NO_THROW(base_permutation(l, m)) << l << " " << m;
    }
    for (int n = 3; n < m; n += 2) {
      for (int l = 4; l <= 8; ++l) {
        if (!is_admissible(l, m, n)) continue;
        const ClauseTrace t = extended_permutation_trace(l, m, n);
        ASSERT_EQ(static_cast<int>(t.clause_of.size()), m);
        for (const auto& id : t.clause_of) EXPECT_FALSE(id.empty());
      }
    }
  }
}

TEST(ExtendedPermutations, InadmissibleFamiliesAreDiagnosed) {
  try {
    extended_permutation(5, 7, 3);  // s = 1 is odd
    FAIL();
  } catch (const ClauseError& e) {
    EXPECT_EQ(e.kind(), ClauseError::Kind::Uncovered);
    EXPECT_EQ(e.family(), 5);
  }
  EXPECT_THROW(extended_permutation(7, 9, 5), ClauseError);  // s = 4 is even
  EXPECT_THROW(extended_permutation(4, 6, 6), std::invalid_argument);
}

TEST(ExtendedPermutations, LiteralClausesConflict) {
  try {
    extended_permutation(4, 8, 7, ClauseReading::AsPrinted);
    FAIL();
  } catch (const ClauseError& e) {
    EXPECT_EQ(e.kind(), ClauseError::Kind::DoublyDefined);
    EXPECT_EQ(e.clauses().size(), 2u);
  }
  EXPECT_THROW(extended_permutation(7, 7, 3, ClauseReading::AsPrinted), ClauseError);
  EXPECT_THROW(extended_permutation(8, 7, 3, ClauseReading::AsPrinted), ClauseError);
}

TEST(Schedule, EvenN) {
  const auto s = schedule_for(4, 6);
  EXPECT_EQ(s.families(), std::vector<int>(6, 1));
}

TEST(Schedule, SmallOddN) {
  EXPECT_EQ(schedule_for(5, 7).families(), (std::vector<int>{2, 2, 2, 2, 2, 1, 1}));
  EXPECT_EQ(schedule_for(4, 5).families(), (std::vector<int>{3, 2, 3, 2, 1}));
}

TEST(Schedule, LargeM) {
  EXPECT_EQ(schedule_for(7, 3).families(), (std::vector<int>{4, 7, 8}));
  EXPECT_EQ(schedule_for(8, 3).families(), (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(schedule_for(8, 3, Family::Cycle, AlternationReading::BlockOffset).families(),
            (std::vector<int>{5, 4, 6}));
}

TEST(Schedule, Rejections) {
  EXPECT_THROW(schedule_for(5, 5, Family::Path), std::invalid_argument);
  EXPECT_THROW(schedule_for(3, 5), std::invalid_argument);
}

TEST(Schedule, LayerParityClosesEverywhere) {
  for (int n = 3; n <= 9; ++n) {
    for (int m = 4; m <= 20; ++m) EXPECT_TRUE(schedule_closes(schedule_for(m, n))) << m << " " << n;
  }
}

TEST(Schedule, ColumnContentsPropagate) {
  const auto s = schedule_for(7, 5);
  const auto c = column_contents(s);
  ASSERT_EQ(c.size(), 5u);
  for (int t = 0; t < 7; ++t) EXPECT_EQ(c[0][t], t);
  for (int j = 1; j < 5; ++j) {
    for (int t = 0; t < 7; ++t) EXPECT_EQ(c[j][s.per_layer[j](t)], c[j - 1][t]);
  }
}

TEST(Schedule, AlternationReadingsShareTotals) {
  for (int n : {3, 5, 7}) {
    for (int m = n + 1; m <= 14; ++m) {
      std::int64_t a = 0, b = 0;
      for (const auto& f : schedule_for(m, n).per_layer) a += sector_crossings_formula(f);
      for (const auto& f : schedule_for(m, n, Family::Cycle, AlternationReading::BlockOffset).per_layer)
        b += sector_crossings_formula(f);
      EXPECT_EQ(a, b);
    }
  }
}
