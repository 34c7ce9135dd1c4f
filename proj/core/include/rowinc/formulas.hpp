#pragma once

#include <cstdint>
#include <vector>

#include "rowinc/qpoly.hpp"
#include "rowinc/tableau.hpp"

namespace rowinc {

// ---- hook length formula --------------------------------------------------

/// Hook length (arm + leg + 1) of every cell, row by row.
std::vector<int> hook_lengths(const Partition& shape);

/// b(shape) = sum_i (i-1) * shape_i, rows counted from 1.
int hook_offset(const Partition& shape);

/// q^b(shape) [N]! / prod_u [h(u)], the generating function of maj over the
/// standard tableaux of `shape` (N = |shape|).
QPoly q_hook_maj_sum(const Partition& shape);

// ---- closed forms for 2-row families -------------------------------------
//
// All take n >= 1 (InputError otherwise) and accept any k; parameters where
// a Gaussian binomial vanishes or the family is empty give the zero
// polynomial. Every division is exact and checked.

/// q^n / [n+1] * [2n choose n]: maj over standard tableaux of shape 2 x n.
QPoly catalan_maj(int n);
/// 1 / [n+1] * [2n choose n]: amaj over standard tableaux of shape 2 x n.
QPoly catalan_amaj(int n);
/// q^(n + k(k+1)/2) / [n+1] * [n-1 choose k] [2n-k choose n]: maj over
/// increasing tableaux with k doubled values.
QPoly increasing_maj(int n, int k);
/// q^(n + k(k-3)/2) / [n-k+1] * [2n-k choose k] [2n-2k choose n-k]: maj over
/// row-increasing tableaux with k doubled values.
QPoly row_increasing_maj(int n, int k);
/// q^(k(k-1)/2) / [n-k+1] * [2n-k choose k] [2n-2k choose n-k]: amaj over
/// row-increasing tableaux with k doubled values.
QPoly row_increasing_amaj(int n, int k);

/// Right-hand side of the recurrence
///   S(n,k) + S(n,k-1) + (1 - q^(2n-k)) (S(n-1,k-1) + S(n-1,k-2))
/// with S = increasing_maj and S(0, .) = 0. Requires 1 <= k < n.
QPoly row_increasing_maj_recurrence(int n, int k);

// ---- counts ----------------------------------------------------------------

/// Ordinary binomial coefficient, 0 outside 0 <= b <= a. Overflow-checked.
std::int64_t binomial(int a, int b);
/// 1/(n+1) C(n-1,k) C(2n-k,n): increasing tableaux of shape 2 x n with k
/// doubled values (small Schroeder refinement). 0 outside 0 <= k <= n-1.
std::int64_t count_increasing(int n, int k);
/// 1/(n-k+1) C(2n-k,k) C(2n-2k,n-k): row-increasing tableaux of shape 2 x n
/// with k doubled values (large Schroeder refinement). 0 outside 0 <= k <= n.
std::int64_t count_row_increasing(int n, int k);
std::int64_t catalan(int n);
/// Sum over k of count_row_increasing(n, k).
std::int64_t large_schroeder(int n);
/// Sum over k of count_increasing(n, k).
std::int64_t small_schroeder(int n);

}  // namespace rowinc
