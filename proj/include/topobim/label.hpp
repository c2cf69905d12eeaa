#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace topobim {

/// Hard cap on the size of a ground set. Exhaustive work stops near 5.
inline constexpr int kMaxLabels = 16;

/// Subset of the positions of one ground set: bit i is the i-th smallest label.
using Mask = std::uint32_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

struct Label {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(Label, Label) = default;
};

/// Sorted, duplicate-free set of at most kMaxLabels labels stored inline.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<std::uint32_t> ids);

  /// Throws kMalformedInput if the ids are not strictly ascending or too many.
  static LabelSet from_ascending(std::span<const std::uint32_t> ids);
  /// Sorts and deduplicates-checks arbitrary ids.
  static LabelSet from_ids(std::vector<std::uint32_t> ids);
  /// {0, 1, ..., n-1}
  static LabelSet first_n(int n);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Label operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
  const Label* begin() const { return ids_.data(); }
  const Label* end() const { return ids_.data() + size_; }

  std::optional<int> index_of(Label label) const;
  bool contains(Label label) const { return index_of(label).has_value(); }

  /// Positions of `subset` inside this set; throws kLabelNotInGroundSet.
  Mask mask_of(const LabelSet& subset) const;
  /// Labels at the given positions.
  LabelSet select(Mask positions) const;

  bool is_subset_of(const LabelSet& other) const;
  bool is_disjoint_from(const LabelSet& other) const;
  LabelSet union_with(const LabelSet& other) const;
  LabelSet minus(const LabelSet& other) const;

  std::vector<std::uint32_t> ids() const;
  std::string to_string() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend auto operator<=>(const LabelSet& a, const LabelSet& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  void push(Label label);

  std::array<Label, kMaxLabels> ids_{};
  std::uint8_t size_ = 0;
};

}  // namespace topobim
