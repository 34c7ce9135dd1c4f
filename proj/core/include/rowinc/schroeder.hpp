#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rowinc/qpoly.hpp"
#include "rowinc/tableau.hpp"

namespace rowinc {

/// Word over {0,1,2} encoding a Schroeder path: 0 = up step U = (0,1),
/// 1 = flat step F = (1,1), 2 = down step D = (1,0).
///
/// Validated on construction: #0 = #2, every prefix has #0 >= #2 (the path
/// stays weakly above y = x), and the word is nonempty.
class SchroederWord {
 public:
  explicit SchroederWord(std::string letters);

  std::string_view letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  /// n: the path ends at (n, n).
  int semilength() const { return semilength_; }
  /// k: number of flat steps.
  int flats() const { return flats_; }
  char operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const SchroederWord&, const SchroederWord&) = default;
  friend auto operator<=>(const SchroederWord& a, const SchroederWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::string letters_;
  int semilength_ = 0;
  int flats_ = 0;
};

/// Step string over {U, D, F}, validated like SchroederWord.
class SchroederPath {
 public:
  explicit SchroederPath(std::string steps);

  std::string_view steps() const { return steps_; }
  friend bool operator==(const SchroederPath&, const SchroederPath&) = default;

 private:
  std::string steps_;
};

SchroederWord word_from_path(const SchroederPath& path);
SchroederPath path_from_word(const SchroederWord& word);

/// Positions i (1-based) with w_i > w_{i+1}.
std::vector<int> word_descents(const SchroederWord& w);
int word_maj(const SchroederWord& w);

/// 1-based positions of flat steps taken while the path touches y = x.
std::vector<int> diagonal_flats(const SchroederWord& w);
/// No flat step on the diagonal.
bool is_small(const SchroederWord& w);

/// Reads values 1..2n-k of an m = 0 tableau: top only -> 0, bottom only -> 2,
/// both -> 1. InputError when m != 0.
SchroederWord tableau_to_word(const Tableau& t);
/// Inverse of tableau_to_word.
Tableau word_to_tableau(const SchroederWord& w);

using WordVisitor = std::function<void(const SchroederWord&)>;

/// Every word of semilength n with k flats, lexicographically (0 < 1 < 2).
/// Nothing for k outside [0, n]; InputError for n < 1.
void for_each_word(int n, int k, const WordVisitor& visit);
std::vector<SchroederWord> enumerate_words(int n, int k);

/// [2n-k choose k] [2n-2k choose n-k] / [n-k+1]: generating function of
/// word_maj over Schroeder words of semilength n with k flats. Zero outside
/// 0 <= k <= n.
QPoly schroeder_maj_sum(int n, int k);

}  // namespace rowinc
