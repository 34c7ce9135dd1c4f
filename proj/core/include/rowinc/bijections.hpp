#pragma once

#include <vector>

#include "rowinc/tableau.hpp"

namespace rowinc {

// ---- equal-column removal ---------------------------------------------------
//
// Row-increasing tableaux with at least one equal column and k doubled
// values are in bijection with increasing tableaux with k-1 doubled values.
// Both directions require offset 0.

/// Deletes the bottom entry of the leftmost equal column, slides the bottom
/// entries to its right one cell left, and appends 2n-k+1.
/// DomainError when no column has equal entries; InputError when m != 0.
Tableau collapse_equal_column(const Tableau& t);

/// Inverse of collapse_equal_column. Finds the rightmost j with
/// S[top][j+1] = S[bottom][j] + 1 (or the virtual column before the first),
/// drops the last bottom entry, and reinserts S[top][j+1] in the bottom row
/// at column j+1. InputError unless the input is increasing with m = 0.
Tableau expand_equal_column(const Tableau& s);

// ---- prime blocks -----------------------------------------------------------

/// A tableau is prime when every column j with top[j+1] = bottom[j] + 1 has a
/// doubled value at bottom[j+1].
bool is_prime(const Tableau& t);

/// Consecutive column blocks of a tableau, each prime. Block j covers columns
/// [first_column[j], first_column[j] + block.columns()).
struct PrimeDecomposition {
  std::vector<Tableau> blocks;
  std::vector<int> first_column;

  /// Column indices c such that a cut falls between columns c-1 and c.
  std::vector<int> cuts() const;
  /// Concatenation of all blocks.
  Tableau join() const;
};

/// Cuts between columns i and i+1 wherever bottom[i] + 1 = top[i+1] and
/// bottom[i+1] is not doubled. Each block keeps its own offset m_j (its
/// smallest entry minus one); the first block keeps the input's offset.
PrimeDecomposition prime_decompose(const Tableau& t);

/// Joins column blocks left to right; the result's offset is the first
/// block's offset.
Tableau concatenate(const std::vector<Tableau>& blocks);

// ---- the prime transform and its inverse -----------------------------------

/// On a prime tableau: let A be the doubled values and, for each a in A, let
/// b be the bottom-row entry cyclically left of a (left of the first column
/// wraps to the last). The top row becomes (top \ A) + B, sorted; the bottom
/// row is unchanged. DomainError on non-prime input.
Tableau prime_transform(const Tableau& t);

/// Inverse of prime_transform: B is the doubled values of the image, A the
/// bottom-row entries cyclically right of them. DomainError if the input is
/// not in the image of a prime tableau.
Tableau prime_transform_inverse(const Tableau& s);

/// Statistics of the skew tableau obtained from a prime tableau by deleting
/// its doubled values from the top row (right-justified).
///
/// descents/ascents are the descent and ascent sets of that skew tableau.
/// x holds the positions (1-based, within the shortened top row) of the
/// descent entries; y holds the bottom-row columns (1-based) of the ascent
/// entries.
struct SkewProfile {
  std::vector<int> descents;
  std::vector<int> ascents;
  int d = 0;
  std::vector<int> x;
  std::vector<int> y;

  friend bool operator==(const SkewProfile&, const SkewProfile&) = default;
};

SkewProfile skew_profile(const Tableau& t);

// ---- the amaj -> maj bijection ------------------------------------------------

/// Applies prime_transform blockwise over prime_decompose. Preserves the
/// bottom row and satisfies maj(result) = amaj(t) + n - k. Requires m = 0.
Tableau amaj_to_maj(const Tableau& t);

/// Block boundaries recovered from an image of amaj_to_maj alone: with j the
/// rightmost equal column (or 0), cut between columns i and i+1 for every
/// i >= max(j, 1) with top[i+1] > bottom[i] (1-based columns). Returned as in
/// PrimeDecomposition::cuts.
std::vector<int> image_cuts(const Tableau& s);

/// Inverse of amaj_to_maj: splits at image_cuts and inverts each block.
Tableau maj_to_amaj(const Tableau& s);

}  // namespace rowinc
