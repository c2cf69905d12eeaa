#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "topobim/label.hpp"

namespace topobim {

/// Square boolean matrix of side at most kMaxLabels, one bitmask per row:
/// get(i, j) == bit j of row(i).
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(int n);

  static BoolMatrix identity(int n);
  /// Throws kMalformedInput unless `rows` is square and small enough.
  static BoolMatrix from_rows(const std::vector<std::vector<bool>>& rows);

  int size() const { return n_; }
  bool get(int i, int j) const { return (rows_[idx(i)] >> j) & 1U; }
  void set(int i, int j, bool value = true);
  Mask row(int i) const { return rows_[idx(i)]; }
  void set_row(int i, Mask m) { rows_[idx(i)] = m; }
  /// Column j as a mask over rows.
  Mask column(int j) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  /// Entrywise containment: every set entry of *this is set in `other`.
  bool is_contained_in(const BoolMatrix& other) const;

  BoolMatrix transposed() const;
  BoolMatrix& operator|=(const BoolMatrix& other);

  std::vector<std::vector<bool>> to_rows() const;
  std::size_t hash() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  friend auto operator<=>(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  std::array<Mask, kMaxLabels> rows_{};
  std::uint8_t n_ = 0;
};

/// Smallest reflexive and transitive relation containing `rel` (Warshall).
BoolMatrix transitive_closure(const BoolMatrix& rel);

}  // namespace topobim
