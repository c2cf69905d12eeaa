#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "topobim/topology.hpp"

namespace topobim {

/// Largest ground set accepted by exhaustive enumeration. Defaults to 5;
/// the TOPOBIM_MAX_N environment variable raises it (at most 7).
int enumeration_limit();
/// Overrides the limit for this process (tests and CLI).
void set_enumeration_limit(int n);
/// Largest ground set accepted by canonical_form.
inline constexpr int kCanonicalLimit = 7;

/// All reflexive transitive matrices on n points in lexicographic order of
/// the row-major matrix. Cached per n; throws kGroundSetTooLarge.
const std::vector<BoolMatrix>& all_relations(int n);

/// Same list, generated by `jobs` threads, each owning the first-row
/// patterns congruent to its index. Output order matches all_relations.
std::vector<BoolMatrix> all_relations_parallel(int n, int jobs);

/// Single-consumer cursor over the labelled topologies on a ground set.
class TopologyIterator {
 public:
  explicit TopologyIterator(const LabelSet& labels);

  std::optional<Topology> next();
  std::size_t size() const { return relations_->size(); }

  class Cursor {
   public:
    Cursor(const TopologyIterator* owner, std::size_t pos) : owner_(owner), pos_(pos) {}
    Topology operator*() const;
    Cursor& operator++() {
      ++pos_;
      return *this;
    }
    bool operator==(const Cursor& other) const { return pos_ == other.pos_; }

   private:
    const TopologyIterator* owner_;
    std::size_t pos_;
  };
  Cursor begin() const { return Cursor(this, 0); }
  Cursor end() const { return Cursor(this, relations_->size()); }

 private:
  LabelSet labels_;
  const std::vector<BoolMatrix>* relations_;
  std::size_t pos_ = 0;
};

TopologyIterator all_topologies(const LabelSet& labels);
std::vector<Topology> topologies_on(const LabelSet& labels);

/// Every T' with T' admissible for t, in enumeration order. Memoised.
std::vector<Topology> admissible_refinements(const Topology& t);

/// Every U with lower <= U <= upper entrywise (same labels), in enumeration order.
std::vector<Topology> topologies_between(const Topology& lower, const Topology& upper);

struct CanonicalClass {
  /// Labelled 0..n-1 with the lexicographically smallest matrix.
  Topology representative;
  std::uint64_t orbit_size = 1;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

/// Minimum over all relabellings; throws kGroundSetTooLarge above 7 labels.
CanonicalClass canonical_form(const Topology& t);

/// One entry per homeomorphism class on n points, ordered by representative.
std::vector<CanonicalClass> canonical_classes(int n);

/// grading -> number of labelled topologies on n points.
std::map<int, std::uint64_t> count_by_grading(int n);

}  // namespace topobim
