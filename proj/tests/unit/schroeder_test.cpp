#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rowinc/enumerate.hpp"
#include "rowinc/error.hpp"
#include "rowinc/formulas.hpp"
#include "rowinc/schroeder.hpp"
#include "rowinc/stats.hpp"

using namespace rowinc;

namespace {

std::string letters(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s.push_back(static_cast<char>('0' + x));
  return s;
}

oracle::Poly coeffs(const QPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

TEST(Schroeder, PathToWordExample) {
  const SchroederWord w = word_from_path(SchroederPath("UUFUUUDFDDDUDD"));
  EXPECT_EQ(w.letters(), "00100021222022");
  EXPECT_EQ(word_descents(w), (std::vector<int>{3, 7, 11}));
  EXPECT_EQ(word_maj(w), 21);
  EXPECT_EQ(w.semilength(), 8);
  EXPECT_EQ(w.flats(), 2);
  EXPECT_EQ(path_from_word(w).steps(), "UUFUUUDFDDDUDD");
}

TEST(Schroeder, ValidatesWords) {
  EXPECT_THROW(SchroederWord(""), InputError);
  EXPECT_THROW(SchroederWord("20"), InputError);
  EXPECT_THROW(SchroederWord("003"), InputError);
  EXPECT_THROW(SchroederWord("001"), InputError);
  EXPECT_THROW(SchroederPath("UX"), InputError);
  EXPECT_NO_THROW(SchroederWord("1"));
}

TEST(Schroeder, TableauWordExamples) {
  EXPECT_EQ(tableau_to_word(Tableau({1, 2, 4, 5, 6, 8}, {3, 4, 6, 7, 8, 9}, 0)).letters(),
            "002101212");
  EXPECT_EQ(tableau_to_word(Tableau({1, 2}, {2, 3}, 0)).letters(), "012");
  EXPECT_EQ(tableau_to_word(Tableau({1}, {1}, 0)).letters(), "1");
  EXPECT_EQ(word_to_tableau(SchroederWord("012")), Tableau({1, 2}, {2, 3}, 0));
  EXPECT_THROW(tableau_to_word(Tableau({2}, {3}, 1)), InputError);
}

TEST(Schroeder, WordEnumerationMatchesFilteredStrings) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::string> want;
      for (const auto& w : oracle::schroeder_words(n, k)) want.push_back(letters(w));
      std::vector<std::string> got;
      for (const auto& w : enumerate_words(n, k)) got.emplace_back(w.letters());
      EXPECT_EQ(got, want) << n << "," << k;
    }
  }
  std::vector<std::string> two_one;
  for (const auto& w : enumerate_words(2, 1)) two_one.emplace_back(w.letters());
  EXPECT_EQ(two_one, (std::vector<std::string>{"012", "021", "102"}));
}

TEST(Schroeder, CorrespondenceWithTableaux) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& t : enumerate_row_increasing(n, k)) {
        const SchroederWord w = tableau_to_word(t);
        EXPECT_EQ(word_to_tableau(w), t);
        EXPECT_EQ(is_small(w), t.strict_columns());
        EXPECT_EQ(w.flats(), k);
      }
    }
  }
}

TEST(Schroeder, AscentsNeedNotBeWordDescents) {
  // 2 and 3 both doubled: 2 is an ascent, but the word has 1 then 1.
  const Tableau t({1, 2, 3}, {2, 3, 4}, 0);
  const SchroederWord w = tableau_to_word(t);
  EXPECT_EQ(w.letters(), "0112");
  EXPECT_EQ(ascent_set(t), (std::vector<int>{2}));
  EXPECT_TRUE(word_descents(w).empty());
}

TEST(Schroeder, DiagonalFlats) {
  EXPECT_EQ(diagonal_flats(SchroederWord("1021")), (std::vector<int>{1, 4}));
  EXPECT_TRUE(is_small(SchroederWord("012")));
  EXPECT_FALSE(is_small(SchroederWord("1")));
}

TEST(Schroeder, MajSumMatchesWords) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      oracle::Poly want;
      for (const auto& w : oracle::schroeder_words(n, k)) {
        int m = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
        }
        if (static_cast<int>(want.size()) <= m) want.resize(m + 1, 0);
        ++want[m];
      }
      EXPECT_EQ(coeffs(schroeder_maj_sum(n, k)), want) << n << "," << k;
      EXPECT_EQ(row_increasing_amaj(n, k), schroeder_maj_sum(n, k).shifted(k * (k - 1) / 2));
    }
  }
}
