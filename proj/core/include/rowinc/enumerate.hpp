#pragma once

#include <functional>
#include <vector>

#include "rowinc/tableau.hpp"

namespace rowinc {

using TableauVisitor = std::function<void(const Tableau&)>;
using GeneralTableauVisitor = std::function<void(const GeneralTableau&)>;

/// Visits every row-increasing tableau of shape 2 x n with k doubled values
/// and entries {m+1, ..., m+2n-k}, each exactly once, in lexicographic order
/// on (top row, bottom row).
///
/// Backtracks over the top row and then the bottom row. Both levels prune
/// with an exact feasibility test, so every top-row leaf reached has at
/// least one completion and no work is spent on dead branches.
///
/// k outside [0, n] yields nothing. n < 1 or m < 0 throws InputError.
void for_each_row_increasing(int n, int k, int m, const TableauVisitor& visit);
std::vector<Tableau> enumerate_row_increasing(int n, int k, int m = 0);

/// Increasing tableaux (strict columns) of shape 2 x n with k doubled values,
/// entries {1, ..., 2n-k}, same order. k outside [0, n-1] yields nothing.
void for_each_increasing(int n, int k, const TableauVisitor& visit);
std::vector<Tableau> enumerate_increasing(int n, int k);

/// Standard Young tableaux of an arbitrary shape. Values are placed in
/// increasing order, trying rows top to bottom; the empty shape yields one
/// empty tableau.
void for_each_standard(const Partition& shape, const GeneralTableauVisitor& visit);
std::vector<GeneralTableau> enumerate_standard(const Partition& shape);

}  // namespace rowinc
