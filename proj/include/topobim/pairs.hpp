#pragma once

#include <compare>

#include "topobim/topology.hpp"

namespace topobim {

/// Basis element (T, Y) of the doubling by open sets: Y is open in T.
class OpenPair {
 public:
  /// The unit (empty topology, empty set).
  OpenPair() = default;
  /// Throws kNotOpen.
  OpenPair(Topology topology, Mask open);
  /// Throws kLabelNotInGroundSet or kNotOpen.
  static OpenPair from_labels(Topology topology, const LabelSet& open);

  const Topology& topology() const { return topology_; }
  Mask open() const { return open_; }
  LabelSet open_labels() const { return topology_.labels().select(open_); }
  const LabelSet& ground() const { return topology_.labels(); }

  friend bool operator==(const OpenPair&, const OpenPair&) = default;
  friend auto operator<=>(const OpenPair&, const OpenPair&) = default;

 private:
  Topology topology_;
  Mask open_ = 0;
};

/// Basis element (T, T') of the doubling by admissible refinements.
class AdmissiblePair {
 public:
  AdmissiblePair() = default;
  /// Throws kGroundSetMismatch or kNotAdmissible.
  AdmissiblePair(Topology base, Topology refinement);

  const Topology& base() const { return base_; }
  const Topology& refinement() const { return refinement_; }
  const LabelSet& ground() const { return base_.labels(); }

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;

 private:
  Topology base_;
  Topology refinement_;
};

}  // namespace topobim
