#include "topobim/topology.hpp"

#include <bit>

#include "topobim/error.hpp"
#include "topobim/fault_injection.hpp"

namespace topobim {
namespace {

// Packs the bits of `value` selected by `selector` into the low bits.
Mask compress(Mask value, Mask selector) {
  Mask out = 0;
  int k = 0;
  for (Mask rest = selector; rest; rest &= rest - 1, ++k) {
    if (value & (rest & -rest)) out |= bit(k);
  }
  return out;
}

void require_same_ground(const Topology& a, const Topology& b) {
  if (a.labels() != b.labels()) {
    throw Error(ErrorCode::kGroundSetMismatch, "topologies live on " + a.labels().to_string() +
                                                   " and " + b.labels().to_string());
  }
}

Mask component_of(const Topology& t, int i) {
  Mask comp = bit(i);
  Mask frontier = comp;
  while (frontier) {
    Mask next = 0;
    for (Mask rest = frontier; rest; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      next |= t.up(j) | t.down(j);
    }
    frontier = next & ~comp;
    comp |= next;
  }
  return comp;
}

Partition to_partition(const Topology& t, const std::vector<Mask>& per_position) {
  Partition p;
  Mask seen = 0;
  for (int i = 0; i < t.size(); ++i) {
    if (seen & bit(i)) continue;
    seen |= per_position[static_cast<std::size_t>(i)];
    p.blocks.push_back(t.labels().select(per_position[static_cast<std::size_t>(i)]));
  }
  return p;
}

int distinct_blocks(const std::vector<Mask>& per_position) {
  int count = 0;
  Mask seen = 0;
  for (std::size_t i = 0; i < per_position.size(); ++i) {
    if (seen & bit(static_cast<int>(i))) continue;
    seen |= per_position[i];
    ++count;
  }
  return count;
}

}  // namespace

Topology Topology::discrete(const LabelSet& labels) {
  return Topology(labels, BoolMatrix::identity(labels.size()));
}

Topology Topology::coarse(const LabelSet& labels) {
  BoolMatrix m(labels.size());
  for (int i = 0; i < labels.size(); ++i) m.set_row(i, full_mask(labels.size()));
  return Topology(labels, m);
}

Topology Topology::chain(const LabelSet& labels) {
  const int n = labels.size();
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) m.set_row(i, full_mask(n) & ~full_mask(i));
  return Topology(labels, m);
}

Topology Topology::trusted(const LabelSet& labels, const BoolMatrix& leq) {
  return Topology(labels, leq);
}

bool Topology::is_open(Mask positions) const {
  for (Mask rest = positions; rest; rest &= rest - 1) {
    if (!is_subset(up(std::countr_zero(rest)), positions)) return false;
  }
  return is_subset(positions, full());
}

Topology make_topology(const LabelSet& labels, const BoolMatrix& rel) {
  if (rel.size() != labels.size()) {
    throw Error(ErrorCode::kMalformedInput, "relation has side " + std::to_string(rel.size()) +
                                                " but there are " +
                                                std::to_string(labels.size()) + " labels");
  }
  if (!rel.is_reflexive()) throw Error(ErrorCode::kNotReflexive, "relation is not reflexive");
  if (!rel.is_transitive()) throw Error(ErrorCode::kNotTransitive, "relation is not transitive");
  return Topology::trusted(labels, rel);
}

std::vector<Mask> open_masks(const Topology& t) {
  std::vector<Mask> out;
  const Mask full = t.full();
  for (Mask m = 0;; ++m) {
    if (t.is_open(m)) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

std::vector<OpenSet> open_sets(const Topology& t) {
  std::vector<OpenSet> out;
  for (Mask m : open_masks(t)) out.push_back(OpenSet{t.labels(), m});
  return out;
}

Topology restrict_mask(const Topology& t, Mask positions) {
  if (!is_subset(positions, t.full())) {
    throw Error(ErrorCode::kLabelNotInGroundSet, "restriction mask leaves the ground set");
  }
  BoolMatrix m(popcount(positions));
  int k = 0;
  for (Mask rest = positions; rest; rest &= rest - 1, ++k) {
    m.set_row(k, compress(t.up(std::countr_zero(rest)), positions));
  }
  return Topology::trusted(t.labels().select(positions), m);
}

Topology restrict(const Topology& t, const LabelSet& subset) {
  return restrict_mask(t, t.labels().mask_of(subset));
}

Topology disjoint_union(const Topology& a, const Topology& b) {
  if (!a.labels().is_disjoint_from(b.labels())) {
    throw Error(ErrorCode::kLabelCollision, "cannot multiply topologies on " +
                                                a.labels().to_string() + " and " +
                                                b.labels().to_string());
  }
  const LabelSet labels = a.labels().union_with(b.labels());
  const int n = labels.size();
  // Position of each factor's i-th label in the merged list.
  std::vector<int> pos_a(static_cast<std::size_t>(a.size()));
  std::vector<int> pos_b(static_cast<std::size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i) pos_a[static_cast<std::size_t>(i)] = *labels.index_of(a.labels()[i]);
  for (int i = 0; i < b.size(); ++i) pos_b[static_cast<std::size_t>(i)] = *labels.index_of(b.labels()[i]);
  BoolMatrix m(n);
  auto place = [&m](const Topology& t, const std::vector<int>& pos) {
    for (int i = 0; i < t.size(); ++i) {
      for (int j = 0; j < t.size(); ++j) {
        if (t.leq(i, j)) m.set(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
      }
    }
  };
  place(a, pos_a);
  place(b, pos_b);
  return Topology::trusted(labels, m);
}

bool is_finer(const Topology& finer, const Topology& coarser) {
  require_same_ground(finer, coarser);
  return finer.relation().is_contained_in(coarser.relation());
}

namespace {

BoolMatrix quotient_relation(const Topology& t, const Topology& finer) {
  BoolMatrix r = t.relation();
  r |= finer.relation().transposed();
  return transitive_closure(r);
}

}  // namespace

Topology quotient(const Topology& t, const Topology& finer) {
  if (!is_finer(finer, t)) {
    throw Error(ErrorCode::kNotFiner, "quotient requires a finer topology");
  }
  if (fault_is(Fault::kQuotientIgnoresRefinement)) return t;
  return Topology::trusted(t.labels(), quotient_relation(t, finer));
}

std::vector<Mask> class_masks(const Topology& t) {
  std::vector<Mask> out(static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) out[static_cast<std::size_t>(i)] = t.up(i) & t.down(i);
  return out;
}

std::vector<Mask> component_masks(const Topology& t) {
  std::vector<Mask> out(static_cast<std::size_t>(t.size()), 0);
  for (int i = 0; i < t.size(); ++i) {
    if (out[static_cast<std::size_t>(i)]) continue;
    const Mask comp = component_of(t, i);
    for (Mask rest = comp; rest; rest &= rest - 1) {
      out[static_cast<std::size_t>(std::countr_zero(rest))] = comp;
    }
  }
  return out;
}

int class_count(const Topology& t) { return distinct_blocks(class_masks(t)); }
int component_count(const Topology& t) { return distinct_blocks(component_masks(t)); }

Partition equivalence_classes(const Topology& t) { return to_partition(t, class_masks(t)); }
Partition connected_components(const Topology& t) { return to_partition(t, component_masks(t)); }

bool is_admissible(const Topology& finer, const Topology& t) {
  if (!is_finer(finer, t)) return false;
  const std::vector<Mask> comps = component_masks(finer);
  if (!fault_is(Fault::kSkipAdmissibilityCondition2)) {
    for (int i = 0; i < t.size(); ++i) {
      const Mask c = comps[static_cast<std::size_t>(i)];
      if ((finer.up(i) & c) != (t.up(i) & c)) return false;
    }
  }
  if (!fault_is(Fault::kSkipAdmissibilityCondition3)) {
    // Exact quotient here, so a corrupted quotient map leaves admissibility alone.
    const Topology q = Topology::trusted(t.labels(), quotient_relation(t, finer));
    const std::vector<Mask> want = fault_is(Fault::kConditionThreeUsesClasses) ? class_masks(finer) : comps;
    if (class_masks(q) != want) return false;
  }
  return true;
}

Topology finest_admissible(const Topology& t) {
  BoolMatrix m(t.size());
  for (int i = 0; i < t.size(); ++i) m.set_row(i, t.up(i) & t.down(i));
  return Topology::trusted(t.labels(), m);
}

int grading_d(const Topology& t) {
  if (fault_is(Fault::kGradingCountsClasses)) return class_count(t);
  return class_count(t) - component_count(t);
}

Topology permute_positions(const Topology& t, std::span<const int> perm) {
  const int n = t.size();
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.leq(i, j)) m.set(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
  }
  return Topology::trusted(t.labels(), m);
}

BoolMatrix order_from_open_sets(int n, const std::vector<Mask>& opens) {
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) {
    Mask common = full_mask(n);
    for (Mask o : opens) {
      if (o & bit(i)) common &= o;
    }
    m.set_row(i, common);
  }
  return m;
}

}  // namespace topobim
