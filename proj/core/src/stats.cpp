#include "rowinc/stats.hpp"

#include <numeric>

namespace rowinc {

std::vector<int> descent_set(const Tableau& t) {
  std::vector<int> out;
  for (int v = t.min_entry(); v < t.max_entry(); ++v) {
    if (t.in_top(v) && t.in_bottom(v + 1)) out.push_back(v);
  }
  return out;
}

std::vector<int> ascent_set(const Tableau& t) {
  std::vector<int> out;
  for (int v = t.min_entry(); v < t.max_entry(); ++v) {
    if (t.in_bottom(v) && t.in_top(v + 1)) out.push_back(v);
  }
  return out;
}

int maj(const Tableau& t) {
  const auto d = descent_set(t);
  return std::accumulate(d.begin(), d.end(), 0);
}

int amaj(const Tableau& t) {
  const auto a = ascent_set(t);
  return std::accumulate(a.begin(), a.end(), 0);
}

StatProfile stat_profile(const Tableau& t) {
  StatProfile p;
  p.descents = descent_set(t);
  p.ascents = ascent_set(t);
  p.maj = std::accumulate(p.descents.begin(), p.descents.end(), 0);
  p.amaj = std::accumulate(p.ascents.begin(), p.ascents.end(), 0);
  return p;
}

std::vector<int> descent_set(const GeneralTableau& t) {
  const int size = t.shape.size();
  std::vector<int> row_of(static_cast<std::size_t>(size) + 2, -1);
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    for (int v : t.cells[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  }
  std::vector<int> out;
  for (int i = 1; i < size; ++i) {
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) {
      out.push_back(i);
    }
  }
  return out;
}

int maj(const GeneralTableau& t) {
  const auto d = descent_set(t);
  return std::accumulate(d.begin(), d.end(), 0);
}

}  // namespace rowinc
