#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rowinc/enumerate.hpp"
#include "rowinc/stats.hpp"

using namespace rowinc;

TEST(Stats, IncreasingExample) {
  const Tableau t({1, 2, 4, 5, 6, 8}, {3, 4, 6, 7, 8, 9}, 0);
  EXPECT_EQ(descent_set(t), (std::vector<int>{2, 5, 6, 8}));
  EXPECT_EQ(ascent_set(t), (std::vector<int>{3, 4, 7}));
  EXPECT_EQ(maj(t), 21);
  EXPECT_EQ(amaj(t), 14);
}

TEST(Stats, SmallCases) {
  EXPECT_EQ(descent_set(Tableau({1, 2}, {3, 4}, 0)), (std::vector<int>{2}));
  EXPECT_EQ(maj(Tableau({1, 2}, {3, 4}, 0)), 2);
  EXPECT_EQ(amaj(Tableau({1, 2}, {3, 4}, 0)), 0);
  EXPECT_EQ(descent_set(Tableau({1, 2}, {2, 3}, 0)), (std::vector<int>{1, 2}));
  EXPECT_EQ(ascent_set(Tableau({1, 3}, {2, 3}, 0)), (std::vector<int>{2}));
  EXPECT_EQ(maj(Tableau({1, 3}, {2, 4}, 0)), 4);
}

TEST(Stats, DoubledValuesUseSetSemantics) {
  // 2 and 3 both doubled: 2 is a descent and an ascent.
  const Tableau t({1, 2, 3}, {2, 3, 4}, 0);
  EXPECT_EQ(descent_set(t), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(ascent_set(t), (std::vector<int>{2}));
}

TEST(Stats, ThreeBlockExample) {
  const Tableau t({1, 2, 4, 5, 6, 9, 10, 12, 13, 14, 16, 18, 20},
                  {2, 3, 6, 7, 8, 9, 11, 13, 15, 16, 17, 19, 20}, 0);
  EXPECT_EQ(amaj(t), 95);
}

TEST(Stats, ProfileBundlesEverything) {
  const Tableau t({1, 2, 4, 5, 6, 8}, {3, 4, 6, 7, 8, 9}, 0);
  const StatProfile p = stat_profile(t);
  EXPECT_EQ(p.descents, descent_set(t));
  EXPECT_EQ(p.ascents, ascent_set(t));
  EXPECT_EQ(p.maj, 21);
  EXPECT_EQ(p.amaj, 14);
}

TEST(Stats, MatchesIndependentScan) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& t : enumerate_row_increasing(n, k)) {
        oracle::TwoRow r{{t.top().begin(), t.top().end()}, {t.bottom().begin(), t.bottom().end()}};
        EXPECT_EQ(descent_set(t), oracle::descents(r));
        EXPECT_EQ(ascent_set(t), oracle::ascents(r));
      }
    }
  }
}

TEST(Stats, GeneralTableauDescents) {
  GeneralTableau t{Partition({2, 1}), {{1, 2}, {3}}};
  EXPECT_EQ(descent_set(t), (std::vector<int>{2}));
  EXPECT_EQ(maj(t), 2);
  GeneralTableau u{Partition({2, 1}), {{1, 3}, {2}}};
  EXPECT_EQ(descent_set(u), (std::vector<int>{1}));
}
