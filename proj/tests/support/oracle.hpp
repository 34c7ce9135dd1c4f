#pragma once

// Reference computations that share no code with the library: plain vectors,
// subset enumeration by bitmask, and polynomials as coefficient vectors.

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;

struct TwoRow {
  std::vector<int> top;
  std::vector<int> bottom;
};

/// All fillings of a 2 x n shape with entries 1..2n-k, k of them in both
/// rows, strict rows and weak (or strict) columns. Enumerated by choosing
/// both rows as bitmask subsets, so the order is unrelated to the library's.
std::vector<TwoRow> two_row_fillings(int n, int k, bool strict_columns);

std::vector<int> descents(const TwoRow& t);
std::vector<int> ascents(const TwoRow& t);
int sum(const std::vector<int>& v);

/// sum over two_row_fillings of q^stat.
Poly maj_sum(int n, int k, bool strict_columns);
Poly amaj_sum(int n, int k);

/// Gaussian binomial as the generating function of b-subsets of {0..a-1} by
/// element sum minus b(b-1)/2.
Poly q_binomial(int a, int b);

/// Standard fillings of a partition found by filtering all permutations;
/// returns the maj generating function (descent i: i+1 in a lower row).
Poly standard_maj_sum(const std::vector<int>& shape);

/// Words over 0,1,2 of the given length with n-k zeros, k ones, n-k twos and
/// no prefix with more 2s than 0s, by filtering all 3^len strings.
std::vector<std::vector<int>> schroeder_words(int n, int k);

std::int64_t choose(int a, int b);

Poly trim(Poly p);

}  // namespace oracle
