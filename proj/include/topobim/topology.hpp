#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "topobim/bool_matrix.hpp"
#include "topobim/label.hpp"

namespace topobim {

/// A topology on a finite labelled set, stored as its quasi-order:
/// leq(i, j) holds when every open set containing label i contains label j.
/// Equality is labelled equality (same labels, same matrix).
class Topology {
 public:
  /// The topology on the empty set, unit of the disjoint-union product.
  Topology() = default;

  static Topology discrete(const LabelSet& labels);
  static Topology coarse(const LabelSet& labels);
  /// labels[0] <= labels[1] <= ... in the given (ascending) label order.
  static Topology chain(const LabelSet& labels);

  /// Skips validation. Callers must pass a reflexive transitive relation.
  static Topology trusted(const LabelSet& labels, const BoolMatrix& leq);

  const LabelSet& labels() const { return labels_; }
  int size() const { return labels_.size(); }
  const BoolMatrix& relation() const { return leq_; }
  bool leq(int i, int j) const { return leq_.get(i, j); }
  /// Positions j with i <= j.
  Mask up(int i) const { return leq_.row(i); }
  /// Positions j with j <= i.
  Mask down(int i) const { return leq_.column(i); }
  Mask full() const { return full_mask(size()); }

  /// Upper-ideal test for a set of positions.
  bool is_open(Mask positions) const;

  friend bool operator==(const Topology&, const Topology&) = default;
  friend auto operator<=>(const Topology&, const Topology&) = default;

 private:
  Topology(const LabelSet& labels, const BoolMatrix& leq) : labels_(labels), leq_(leq) {}

  LabelSet labels_;
  BoolMatrix leq_;
};

/// Validating constructor; the relation is stored verbatim.
/// Throws kNotReflexive, kNotTransitive or kMalformedInput (size mismatch).
Topology make_topology(const LabelSet& labels, const BoolMatrix& rel);

/// An open set of a topology. `ground` is the label list the mask indexes.
struct OpenSet {
  LabelSet ground;
  Mask members = 0;

  LabelSet labels() const { return ground.select(members); }
  friend bool operator==(const OpenSet&, const OpenSet&) = default;
};

/// A disjoint cover of a label list by nonempty blocks, ordered by smallest label.
struct Partition {
  std::vector<LabelSet> blocks;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All open sets (upper ideals) in increasing mask order; always contains
/// the empty set first and the full set last.
std::vector<OpenSet> open_sets(const Topology& t);
std::vector<Mask> open_masks(const Topology& t);

/// Throws kLabelNotInGroundSet unless subset is inside labels(t).
/// Labels keep their identities.
Topology restrict(const Topology& t, const LabelSet& subset);
Topology restrict_mask(const Topology& t, Mask positions);

/// Block-diagonal union; throws kLabelCollision on shared labels.
Topology disjoint_union(const Topology& a, const Topology& b);

/// finer <= coarser entrywise. Throws kGroundSetMismatch.
bool is_finer(const Topology& finer, const Topology& coarser);

/// Quotient t/finer: transitive closure of (x <=_t y or y <=_finer x).
/// Throws kGroundSetMismatch or kNotFiner.
Topology quotient(const Topology& t, const Topology& finer);

/// Equivalence classes of mutual comparability.
Partition equivalence_classes(const Topology& t);
/// Components of the symmetrised relation.
Partition connected_components(const Topology& t);

/// Per-position masks: element i maps to the block containing position i.
std::vector<Mask> class_masks(const Topology& t);
std::vector<Mask> component_masks(const Topology& t);
int class_count(const Topology& t);
int component_count(const Topology& t);

/// Admissibility of a refinement:
///   (1) finer is finer than t,
///   (2) finer and t agree on every connected subset of finer; every such
///       subset sits inside one component of finer and restriction to a
///       subset of an agreeing set agrees, so checking the components suffices,
///   (3) the classes of t/finer are exactly the components of finer.
/// Throws kGroundSetMismatch.
bool is_admissible(const Topology& finer, const Topology& t);

/// D_{X,T}: classes of t made coarse, no relation between distinct classes.
Topology finest_admissible(const Topology& t);

/// Number of classes minus number of components.
int grading_d(const Topology& t);

/// Permutes positions: label at new position perm[i] comes from old position i.
/// Label list is kept; used for relabelling within one ground set.
Topology permute_positions(const Topology& t, std::span<const int> perm);

/// Rebuilds the topology from its open sets via "x <= y iff every open set
/// containing x contains y".
BoolMatrix order_from_open_sets(int n, const std::vector<Mask>& opens);

}  // namespace topobim

template <>
struct std::hash<topobim::BoolMatrix> {
  std::size_t operator()(const topobim::BoolMatrix& m) const noexcept { return m.hash(); }
};
