#include "rowinc/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rowinc/error.hpp"

namespace rowinc {

std::string_view to_string(TableauClass c) {
  switch (c) {
    case TableauClass::Invalid: return "Invalid";
    case TableauClass::RowIncreasing: return "RowIncreasing";
    case TableauClass::Increasing: return "Increasing";
    case TableauClass::SYT: return "SYT";
  }
  return "Invalid";
}

namespace {

void check_shape(std::span<const int> top, std::span<const int> bottom) {
  if (top.size() != bottom.size()) {
    throw InputError("rows have unequal length (" + std::to_string(top.size()) + " vs " +
                     std::to_string(bottom.size()) + ")");
  }
  if (top.empty()) throw InputError("tableau has no columns (n must be at least 1)");
}

int count_doubled(std::span<const int> top, std::span<const int> bottom) {
  // Both rows sorted: merge-count common values.
  int common = 0;
  std::size_t i = 0, j = 0;
  while (i < top.size() && j < bottom.size()) {
    if (top[i] == bottom[j]) {
      ++common;
      ++i;
      ++j;
    } else if (top[i] < bottom[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return common;
}

}  // namespace

std::optional<std::string> find_violation(std::span<const int> top, std::span<const int> bottom,
                                          int offset) {
  check_shape(top, bottom);
  if (offset < 0) return "offset m must be nonnegative";
  const std::size_t n = top.size();
  for (std::size_t r = 0; r < 2; ++r) {
    const auto row = r == 0 ? top : bottom;
    for (std::size_t j = 1; j < n; ++j) {
      if (row[j] <= row[j - 1]) {
        return "row " + std::to_string(r + 1) + " is not strictly increasing at column " +
               std::to_string(j + 1);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (top[j] > bottom[j]) {
      return "column " + std::to_string(j + 1) + " is not weakly increasing (" +
             std::to_string(top[j]) + " above " + std::to_string(bottom[j]) + ")";
    }
  }
  const int k = count_doubled(top, bottom);
  const int lo = offset + 1;
  const int hi = offset + 2 * static_cast<int>(n) - k;
  const int actual_lo = std::min(top.front(), bottom.front());
  const int actual_hi = std::max(top.back(), bottom.back());
  // With strict rows and k common values there are exactly 2n-k distinct
  // entries, so matching both endpoints pins the whole segment.
  if (actual_lo != lo || actual_hi != hi) {
    return "entries are not the segment {" + std::to_string(lo) + ".." + std::to_string(hi) +
           "} for m=" + std::to_string(offset) + ", k=" + std::to_string(k) + " (found " +
           std::to_string(actual_lo) + ".." + std::to_string(actual_hi) + ")";
  }
  return std::nullopt;
}

TableauClass classify(std::span<const int> top, std::span<const int> bottom, int offset) {
  if (find_violation(top, bottom, offset)) return TableauClass::Invalid;
  for (std::size_t j = 0; j < top.size(); ++j) {
    if (top[j] == bottom[j]) return TableauClass::RowIncreasing;
  }
  return count_doubled(top, bottom) == 0 ? TableauClass::SYT : TableauClass::Increasing;
}

TableauClass classify(const Tableau& t) { return classify(t.top(), t.bottom(), t.offset()); }

Tableau::Tableau(std::vector<int> top, std::vector<int> bottom, int offset)
    : top_(std::move(top)), bottom_(std::move(bottom)), offset_(offset) {
  if (auto why = find_violation(top_, bottom_, offset_)) throw InputError(*why);
  doubled_ = count_doubled(top_, bottom_);
  index_entries();
}

Tableau::Tableau(Trusted, std::vector<int> top, std::vector<int> bottom, int offset, int doubled)
    : top_(std::move(top)), bottom_(std::move(bottom)), offset_(offset), doubled_(doubled) {
  assert(!find_violation(top_, bottom_, offset_));
  assert(doubled_ == count_doubled(top_, bottom_));
  index_entries();
}

void Tableau::index_entries() {
  where_.assign(static_cast<std::size_t>(span_size()), 0);
  for (int v : top_) where_[static_cast<std::size_t>(v - offset_ - 1)] |= kTop;
  for (int v : bottom_) where_[static_cast<std::size_t>(v - offset_ - 1)] |= kBottom;
}

Tableau Tableau::from_rows(std::vector<int> top, std::vector<int> bottom) {
  check_shape(top, bottom);
  const int lo = std::min(top.front(), bottom.front());
  return Tableau(std::move(top), std::move(bottom), lo - 1);
}

bool Tableau::has_equal_column() const {
  for (std::size_t j = 0; j < top_.size(); ++j) {
    if (top_[j] == bottom_[j]) return true;
  }
  return false;
}

Tableau Tableau::shifted(int delta) const {
  auto top = top_;
  auto bottom = bottom_;
  for (int& v : top) v += delta;
  for (int& v : bottom) v += delta;
  return Tableau(std::move(top), std::move(bottom), offset_ + delta);
}

bool operator<(const Tableau& a, const Tableau& b) {
  if (a.top_ != b.top_) return a.top_ < b.top_;
  return a.bottom_ < b.bottom_;
}

Tableau TableauBuilder::trusted(std::vector<int> top, std::vector<int> bottom, int offset,
                                int doubled) {
  return Tableau(Tableau::Trusted{}, std::move(top), std::move(bottom), offset, doubled);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(conj));
}

std::vector<Partition> partitions_of(int size) {
  if (size < 0) throw InputError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> parts;
  // Parts chosen in non-increasing order, largest first part first.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, size, size);
  return out;
}

}  // namespace rowinc
