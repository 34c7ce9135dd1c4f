#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rowinc {

/// Strongest family a pair of rows belongs to. Each level implies the next:
/// SYT => Increasing => RowIncreasing.
enum class TableauClass { Invalid, RowIncreasing, Increasing, SYT };

std::string_view to_string(TableauClass c);

/// A row-increasing tableau of shape 2 x n.
///
/// Rows are strictly increasing, columns weakly increasing, and the entries
/// form the segment {m+1, ..., m+2n-k} where exactly k values appear in both
/// rows. Construction validates every rule and throws InputError naming the
/// first one that fails, so a Tableau object is always valid.
///
/// Columns are 0-based in this API.
class Tableau {
 public:
  /// Membership bits returned by membership().
  static constexpr std::uint8_t kTop = 1;
  static constexpr std::uint8_t kBottom = 2;

  Tableau(std::vector<int> top, std::vector<int> bottom, int offset);

  /// Offset inferred as (smallest entry - 1).
  static Tableau from_rows(std::vector<int> top, std::vector<int> bottom);

  int columns() const { return static_cast<int>(top_.size()); }
  int offset() const { return offset_; }
  int doubled() const { return doubled_; }
  /// Number of distinct entries, 2n - k.
  int span_size() const { return 2 * columns() - doubled_; }
  int min_entry() const { return offset_ + 1; }
  int max_entry() const { return offset_ + span_size(); }

  std::span<const int> top() const { return top_; }
  std::span<const int> bottom() const { return bottom_; }
  std::span<const int> row(int r) const { return r == 0 ? top() : bottom(); }

  /// Bitmask of kTop/kBottom for the rows containing `value`; 0 when the
  /// value lies outside the entry segment.
  std::uint8_t membership(int value) const {
    const int idx = value - offset_ - 1;
    if (idx < 0 || idx >= span_size()) return 0;
    return where_[static_cast<std::size_t>(idx)];
  }
  bool in_top(int value) const { return (membership(value) & kTop) != 0; }
  bool in_bottom(int value) const { return (membership(value) & kBottom) != 0; }
  bool is_doubled(int value) const { return membership(value) == (kTop | kBottom); }

  /// True when some column has equal entries.
  bool has_equal_column() const;
  /// True when every column is strictly increasing.
  bool strict_columns() const { return !has_equal_column(); }

  /// The same tableau with every entry increased by `delta`.
  Tableau shifted(int delta) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.offset_ == b.offset_ && a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }
  /// Lexicographic on (top, bottom); the canonical enumeration order.
  friend bool operator<(const Tableau& a, const Tableau& b);

 private:
  struct Trusted {};
  Tableau(Trusted, std::vector<int> top, std::vector<int> bottom, int offset, int doubled);
  void index_entries();

  friend class TableauBuilder;

  std::vector<int> top_;
  std::vector<int> bottom_;
  int offset_ = 0;
  int doubled_ = 0;
  std::vector<std::uint8_t> where_;
};

/// Builds tableaux from rows already known to be valid (enumerators and
/// bijection outputs checked by construction elsewhere). Debug builds still
/// assert validity.
class TableauBuilder {
 public:
  static Tableau trusted(std::vector<int> top, std::vector<int> bottom, int offset, int doubled);
};

/// First violated tableau rule for the given rows and offset, or nullopt.
/// Throws InputError only for rows of unequal length or n = 0.
std::optional<std::string> find_violation(std::span<const int> top, std::span<const int> bottom,
                                          int offset);

/// Strongest class of the rows for entry segment starting at offset+1.
/// k is inferred from the entry multiset.
TableauClass classify(std::span<const int> top, std::span<const int> bottom, int offset);
TableauClass classify(const Tableau& t);

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of `size`, parts in decreasing lexicographic order.
std::vector<Partition> partitions_of(int size);

/// A filling of a Young diagram, stored row by row.
struct GeneralTableau {
  Partition shape;
  std::vector<std::vector<int>> cells;

  friend bool operator==(const GeneralTableau&, const GeneralTableau&) = default;
};

}  // namespace rowinc
