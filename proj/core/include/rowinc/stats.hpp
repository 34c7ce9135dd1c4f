#pragma once

#include <vector>

#include "rowinc/tableau.hpp"

namespace rowinc {

/// Descent and ascent statistics of a 2-row tableau.
///
/// i is a descent when i is in the top row and i+1 in the bottom row; an
/// ascent when i is in the bottom row and i+1 in the top row. Both are sets:
/// a value contributes at most once, and when i and i+1 are both doubled, i
/// is a descent and an ascent at once. Only row membership matters, never
/// column positions.
struct StatProfile {
  std::vector<int> descents;
  std::vector<int> ascents;
  int maj = 0;
  int amaj = 0;

  friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

std::vector<int> descent_set(const Tableau& t);
std::vector<int> ascent_set(const Tableau& t);
int maj(const Tableau& t);
int amaj(const Tableau& t);
StatProfile stat_profile(const Tableau& t);

/// Descents of a standard tableau of any shape: i with i+1 in a strictly
/// lower row.
std::vector<int> descent_set(const GeneralTableau& t);
int maj(const GeneralTableau& t);

}  // namespace rowinc
