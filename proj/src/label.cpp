#include "topobim/label.hpp"

#include <algorithm>
#include <sstream>

#include "topobim/error.hpp"

namespace topobim {

LabelSet::LabelSet(std::initializer_list<std::uint32_t> ids)
    : LabelSet(from_ids(std::vector<std::uint32_t>(ids))) {}

void LabelSet::push(Label label) {
  if (size_ >= kMaxLabels) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground sets are limited to " + std::to_string(kMaxLabels) + " labels");
  }
  ids_[size_++] = label;
}

LabelSet LabelSet::from_ascending(std::span<const std::uint32_t> ids) {
  LabelSet out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0 && ids[i] <= ids[i - 1]) {
      throw Error(ErrorCode::kMalformedInput, "labels must be strictly ascending");
    }
    out.push(Label{ids[i]});
  }
  return out;
}

LabelSet LabelSet::from_ids(std::vector<std::uint32_t> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw Error(ErrorCode::kMalformedInput, "duplicate label");
  }
  return from_ascending(ids);
}

LabelSet LabelSet::first_n(int n) {
  LabelSet out;
  for (int i = 0; i < n; ++i) out.push(Label{static_cast<std::uint32_t>(i)});
  return out;
}

std::optional<int> LabelSet::index_of(Label label) const {
  const auto* it = std::lower_bound(begin(), end(), label);
  if (it == end() || *it != label) return std::nullopt;
  return static_cast<int>(it - begin());
}

Mask LabelSet::mask_of(const LabelSet& subset) const {
  Mask m = 0;
  for (Label l : subset) {
    auto i = index_of(l);
    if (!i) {
      throw Error(ErrorCode::kLabelNotInGroundSet,
                  "label " + std::to_string(l.id) + " is not in " + to_string());
    }
    m |= bit(*i);
  }
  return m;
}

LabelSet LabelSet::select(Mask positions) const {
  LabelSet out;
  for (int i = 0; i < size_; ++i) {
    if (positions & bit(i)) out.push(ids_[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool LabelSet::is_subset_of(const LabelSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool LabelSet::is_disjoint_from(const LabelSet& other) const {
  const Label* a = begin();
  const Label* b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

LabelSet LabelSet::union_with(const LabelSet& other) const {
  std::vector<Label> merged;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(merged));
  LabelSet out;
  for (Label l : merged) out.push(l);
  return out;
}

LabelSet LabelSet::minus(const LabelSet& other) const {
  LabelSet out;
  for (Label l : *this) {
    if (!other.contains(l)) out.push(l);
  }
  return out;
}

std::vector<std::uint32_t> LabelSet::ids() const {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (Label l : *this) out.push_back(l.id);
  return out;
}

std::string LabelSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < size_; ++i) {
    if (i) os << ',';
    os << ids_[static_cast<std::size_t>(i)].id;
  }
  os << '}';
  return os.str();
}

}  // namespace topobim
