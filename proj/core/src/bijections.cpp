#include "rowinc/bijections.hpp"

#include <algorithm>
#include <iterator>

#include "rowinc/error.hpp"

namespace rowinc {

namespace {

void require_offset_zero(const Tableau& t, const char* what) {
  if (t.offset() != 0) {
    throw InputError(std::string(what) + " needs entries starting at 1 (m = 0), got m = " +
                     std::to_string(t.offset()));
  }
}

std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

std::vector<int> doubled_values(const Tableau& t) {
  std::vector<int> out;
  std::set_intersection(t.top().begin(), t.top().end(), t.bottom().begin(), t.bottom().end(),
                        std::back_inserter(out));
  return out;
}

std::size_t bottom_column_of(const Tableau& t, int value) {
  const auto b = t.bottom();
  return static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), value) - b.begin());
}

// (top \ removed) + added, sorted. Both inputs sorted.
std::vector<int> replace_in_top(const Tableau& t, const std::vector<int>& removed,
                                std::vector<int> added) {
  std::vector<int> kept;
  std::set_difference(t.top().begin(), t.top().end(), removed.begin(), removed.end(),
                      std::back_inserter(kept));
  std::sort(added.begin(), added.end());
  std::vector<int> out;
  std::merge(kept.begin(), kept.end(), added.begin(), added.end(), std::back_inserter(out));
  return out;
}

Tableau slice(const Tableau& t, int first, int last) {
  std::vector<int> top(t.top().begin() + first, t.top().begin() + last);
  std::vector<int> bottom(t.bottom().begin() + first, t.bottom().begin() + last);
  const int offset = std::min(top.front(), bottom.front()) - 1;
  return Tableau(std::move(top), std::move(bottom), offset);
}

}  // namespace

Tableau collapse_equal_column(const Tableau& t) {
  require_offset_zero(t, "collapse_equal_column");
  const auto top = t.top();
  const auto bottom = t.bottom();
  const auto n = static_cast<std::size_t>(t.columns());
  std::size_t j = 0;
  while (j < n && top[j] != bottom[j]) ++j;
  if (j == n) throw DomainError("tableau has no column with equal entries");
  std::vector<int> new_bottom = to_vector(bottom);
  new_bottom.erase(new_bottom.begin() + static_cast<std::ptrdiff_t>(j));
  new_bottom.push_back(2 * t.columns() - t.doubled() + 1);
  return Tableau(to_vector(top), std::move(new_bottom), 0);
}

Tableau expand_equal_column(const Tableau& s) {
  require_offset_zero(s, "expand_equal_column");
  if (s.has_equal_column()) throw InputError("input must be an increasing tableau (strict columns)");
  const auto top = s.top();
  const auto bottom = s.bottom();
  const auto n = static_cast<std::size_t>(s.columns());
  // Number of columns left of the reinserted cell.
  std::size_t split = 0;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (top[c + 1] == bottom[c] + 1) split = c + 1;
  }
  std::vector<int> new_bottom(bottom.begin(), bottom.begin() + static_cast<std::ptrdiff_t>(split));
  new_bottom.push_back(top[split]);
  new_bottom.insert(new_bottom.end(), bottom.begin() + static_cast<std::ptrdiff_t>(split),
                    bottom.end() - 1);
  return Tableau(to_vector(top), std::move(new_bottom), 0);
}

bool is_prime(const Tableau& t) {
  const auto top = t.top();
  const auto bottom = t.bottom();
  for (std::size_t c = 0; c + 1 < top.size(); ++c) {
    if (top[c + 1] == bottom[c] + 1 && !t.is_doubled(bottom[c + 1])) return false;
  }
  return true;
}

std::vector<int> PrimeDecomposition::cuts() const {
  return {first_column.begin() + (first_column.empty() ? 0 : 1), first_column.end()};
}

Tableau PrimeDecomposition::join() const { return concatenate(blocks); }

PrimeDecomposition prime_decompose(const Tableau& t) {
  const auto top = t.top();
  const auto bottom = t.bottom();
  const int n = t.columns();
  PrimeDecomposition out;
  int start = 0;
  for (int c = 1; c <= n; ++c) {
    const bool cut = c == n || (bottom[static_cast<std::size_t>(c - 1)] + 1 ==
                                    top[static_cast<std::size_t>(c)] &&
                                !t.is_doubled(bottom[static_cast<std::size_t>(c)]));
    if (!cut) continue;
    out.blocks.push_back(slice(t, start, c));
    out.first_column.push_back(start);
    start = c;
  }
  return out;
}

Tableau concatenate(const std::vector<Tableau>& blocks) {
  if (blocks.empty()) throw InputError("cannot concatenate zero blocks");
  std::vector<int> top;
  std::vector<int> bottom;
  for (const auto& b : blocks) {
    top.insert(top.end(), b.top().begin(), b.top().end());
    bottom.insert(bottom.end(), b.bottom().begin(), b.bottom().end());
  }
  return Tableau(std::move(top), std::move(bottom), blocks.front().offset());
}

Tableau prime_transform(const Tableau& t) {
  if (!is_prime(t)) throw DomainError("prime_transform needs a prime tableau");
  const auto bottom = t.bottom();
  const auto n = bottom.size();
  const std::vector<int> a = doubled_values(t);
  std::vector<int> b;
  b.reserve(a.size());
  for (int v : a) b.push_back(bottom[(bottom_column_of(t, v) + n - 1) % n]);
  return Tableau(replace_in_top(t, a, std::move(b)), to_vector(bottom), t.offset());
}

Tableau prime_transform_inverse(const Tableau& s) {
  const auto bottom = s.bottom();
  const auto n = bottom.size();
  const std::vector<int> b = doubled_values(s);
  std::vector<int> a;
  a.reserve(b.size());
  for (int v : b) a.push_back(bottom[(bottom_column_of(s, v) + 1) % n]);
  std::optional<Tableau> pre;
  try {
    pre.emplace(replace_in_top(s, b, std::move(a)), to_vector(bottom), s.offset());
  } catch (const InputError& e) {
    throw DomainError(std::string("not in the image of prime_transform: ") + e.what());
  }
  if (!is_prime(*pre) || prime_transform(*pre) != s) {
    throw DomainError("not in the image of prime_transform");
  }
  return *pre;
}

SkewProfile skew_profile(const Tableau& t) {
  if (!is_prime(t)) throw DomainError("skew_profile needs a prime tableau");
  std::vector<int> shortened;
  for (int v : t.top()) {
    if (!t.is_doubled(v)) shortened.push_back(v);
  }
  auto in_shortened = [&](int v) {
    return std::binary_search(shortened.begin(), shortened.end(), v);
  };
  SkewProfile p;
  for (std::size_t i = 0; i < shortened.size(); ++i) {
    if (t.in_bottom(shortened[i] + 1)) {
      p.descents.push_back(shortened[i]);
      p.x.push_back(static_cast<int>(i) + 1);
    }
  }
  const auto bottom = t.bottom();
  for (std::size_t c = 0; c < bottom.size(); ++c) {
    if (in_shortened(bottom[c] + 1)) {
      p.ascents.push_back(bottom[c]);
      p.y.push_back(static_cast<int>(c) + 1);
    }
  }
  p.d = static_cast<int>(p.descents.size());
  return p;
}

Tableau amaj_to_maj(const Tableau& t) {
  require_offset_zero(t, "amaj_to_maj");
  const PrimeDecomposition parts = prime_decompose(t);
  std::vector<Tableau> images;
  images.reserve(parts.blocks.size());
  for (const auto& block : parts.blocks) images.push_back(prime_transform(block));
  return concatenate(images);
}

std::vector<int> image_cuts(const Tableau& s) {
  const auto top = s.top();
  const auto bottom = s.bottom();
  const int n = s.columns();
  // Rightmost equal column, 1-based; 0 when there is none.
  int rightmost = 0;
  for (int c = n; c >= 1; --c) {
    if (top[static_cast<std::size_t>(c - 1)] == bottom[static_cast<std::size_t>(c - 1)]) {
      rightmost = c;
      break;
    }
  }
  std::vector<int> cuts;
  for (int i = std::max(rightmost, 1); i <= n - 1; ++i) {
    // 1-based columns i and i+1 are 0-based i-1 and i.
    if (top[static_cast<std::size_t>(i)] > bottom[static_cast<std::size_t>(i - 1)]) {
      cuts.push_back(i);
    }
  }
  return cuts;
}

Tableau maj_to_amaj(const Tableau& s) {
  require_offset_zero(s, "maj_to_amaj");
  std::vector<int> bounds = image_cuts(s);
  bounds.insert(bounds.begin(), 0);
  bounds.push_back(s.columns());
  std::vector<Tableau> preimages;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    std::optional<Tableau> block;
    try {
      block.emplace(slice(s, bounds[i], bounds[i + 1]));
    } catch (const InputError& e) {
      throw DomainError(std::string("block is not a row-increasing tableau: ") + e.what());
    }
    preimages.push_back(prime_transform_inverse(*block));
  }
  return concatenate(preimages);
}

}  // namespace rowinc
