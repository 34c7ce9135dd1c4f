#include "rowinc/enumerate.hpp"

#include <algorithm>

#include "rowinc/error.hpp"

namespace rowinc {

namespace {

// Backtracking state for one (n, k) family. Entries are generated on the
// segment 1..2n-k and shifted by the offset at emission.
class RowSearch {
 public:
  RowSearch(int n, int k, int offset, bool strict, const TableauVisitor& visit)
      : n_(n), k_(k), span_(2 * n - k), offset_(offset), gap_(strict ? 1 : 0), visit_(visit),
        in_top_(static_cast<std::size_t>(span_) + 2, false) {
    top_.reserve(static_cast<std::size_t>(n));
    bottom_.reserve(static_cast<std::size_t>(n));
  }

  void run() { fill_top(0); }

 private:
  // A top-row prefix whose counting function A(v) = #{top <= v} satisfies
  //   v - A(v) + max(0, A(v) - (n-k)) <= A(v)
  // for every v up to its last entry always extends to a full tableau: put
  // the k largest top values into the bottom row alongside the complement.
  bool top_prefix_ok(int v, int count) const {
    const int forced_doubles = std::max(0, count - (n_ - k_));
    return v - count + forced_doubles <= count;
  }

  void fill_top(int j) {
    if (j == n_) {
      complement_.clear();
      for (int v = 1; v <= span_; ++v) {
        if (!in_top_[static_cast<std::size_t>(v)]) complement_.push_back(v);
      }
      fill_bottom(0, 0, 0);
      return;
    }
    const int prev = j == 0 ? 0 : top_.back();
    for (int x = prev + 1; x <= span_; ++x) {
      // Moving past x-1 leaves it out of the top row.
      if (x - 1 > prev && !top_prefix_ok(x - 1, j)) break;
      if (!top_prefix_ok(x, j + 1)) break;
      top_.push_back(x);
      in_top_[static_cast<std::size_t>(x)] = true;
      fill_top(j + 1);
      in_top_[static_cast<std::size_t>(x)] = false;
      top_.pop_back();
    }
  }

  // Can bottom positions j.. be completed after placing `last` with
  // `doubles` doubled values so far? Greedy: the remaining complement values
  // plus the largest remaining top values dominate best.
  bool bottom_completable(int j, int last, int doubles) const {
    const int need = k_ - doubles;
    if (need < 0) return false;
    // Top values > last available for doubling are a suffix of top_.
    const auto top_from = std::upper_bound(top_.begin(), top_.end(), last);
    if (top_.end() - top_from < need) return false;
    const auto c_from = std::upper_bound(complement_.begin(), complement_.end(), last);
    auto ci = c_from;
    auto ti = top_.end() - need;
    for (int pos = j; pos < n_; ++pos) {
      int next;
      if (ti == top_.end() || (ci != complement_.end() && *ci < *ti)) {
        if (ci == complement_.end()) return false;
        next = *ci++;
      } else {
        next = *ti++;
      }
      if (next < top_[static_cast<std::size_t>(pos)] + gap_) return false;
    }
    return ci == complement_.end() && ti == top_.end();
  }

  void fill_bottom(int j, int prev, int doubles) {
    if (j == n_) {
      if (doubles != k_) return;
      emit();
      return;
    }
    for (int x = prev + 1; x <= span_; ++x) {
      // Skipping a value that is not in the top row would lose it entirely.
      if (x - 1 > prev && !in_top_[static_cast<std::size_t>(x - 1)]) break;
      if (x < top_[static_cast<std::size_t>(j)] + gap_) continue;
      const int d = doubles + (in_top_[static_cast<std::size_t>(x)] ? 1 : 0);
      if (d > k_) continue;
      if (!bottom_completable(j + 1, x, d)) continue;
      bottom_.push_back(x);
      fill_bottom(j + 1, x, d);
      bottom_.pop_back();
    }
  }

  void emit() {
    auto top = top_;
    auto bottom = bottom_;
    if (offset_ != 0) {
      for (int& v : top) v += offset_;
      for (int& v : bottom) v += offset_;
    }
    visit_(TableauBuilder::trusted(std::move(top), std::move(bottom), offset_, k_));
  }

  int n_;
  int k_;
  int span_;
  int offset_;
  int gap_;
  const TableauVisitor& visit_;
  std::vector<int> top_;
  std::vector<int> bottom_;
  std::vector<int> complement_;
  std::vector<bool> in_top_;
};

void check_params(int n, int m) {
  if (n < 1) throw InputError("n must be at least 1");
  if (m < 0) throw InputError("offset m must be nonnegative");
}

std::vector<Tableau> collect(const std::function<void(const TableauVisitor&)>& run) {
  std::vector<Tableau> out;
  run([&](const Tableau& t) { out.push_back(t); });
  return out;
}

}  // namespace

void for_each_row_increasing(int n, int k, int m, const TableauVisitor& visit) {
  check_params(n, m);
  if (k < 0 || k > n) return;
  RowSearch(n, k, m, /*strict=*/false, visit).run();
}

std::vector<Tableau> enumerate_row_increasing(int n, int k, int m) {
  return collect([&](const TableauVisitor& v) { for_each_row_increasing(n, k, m, v); });
}

void for_each_increasing(int n, int k, const TableauVisitor& visit) {
  check_params(n, 0);
  if (k < 0 || k > n - 1) return;
  RowSearch(n, k, 0, /*strict=*/true, visit).run();
}

std::vector<Tableau> enumerate_increasing(int n, int k) {
  return collect([&](const TableauVisitor& v) { for_each_increasing(n, k, v); });
}

void for_each_standard(const Partition& shape, const GeneralTableauVisitor& visit) {
  GeneralTableau current{shape, {}};
  current.cells.resize(static_cast<std::size_t>(shape.rows()));
  const int total = shape.size();
  auto place = [&](auto&& self, int value) -> void {
    if (value > total) {
      visit(current);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      auto& row = current.cells[static_cast<std::size_t>(r)];
      const auto len = static_cast<int>(row.size());
      if (len >= shape[r]) continue;
      if (r > 0 && static_cast<int>(current.cells[static_cast<std::size_t>(r - 1)].size()) <= len) {
        continue;
      }
      row.push_back(value);
      self(self, value + 1);
      row.pop_back();
    }
  };
  place(place, 1);
}

std::vector<GeneralTableau> enumerate_standard(const Partition& shape) {
  std::vector<GeneralTableau> out;
  for_each_standard(shape, [&](const GeneralTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace rowinc
