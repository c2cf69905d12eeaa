#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "topobim/bialgebra.hpp"
#include "topobim/enumeration.hpp"
#include "topobim/error.hpp"
#include "topobim/json_io.hpp"
#include "topobim/pairs.hpp"
#include "topobim/topology.hpp"

namespace testing_support {

using namespace topobim;

inline Topology from_rel(const oracle::Rel& r, const LabelSet& labels) {
  BoolMatrix m(static_cast<int>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[i][j]) m.set(static_cast<int>(i), static_cast<int>(j));
  return make_topology(labels, m);
}

inline Topology from_rel(const oracle::Rel& r) { return from_rel(r, LabelSet::first_n(static_cast<int>(r.size()))); }

inline oracle::Rel to_rel(const Topology& t) {
  oracle::Rel r(static_cast<std::size_t>(t.size()), std::vector<int>(static_cast<std::size_t>(t.size())));
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.leq(i, j);
  return r;
}

// Topology from explicit "i <= j" pairs on the given labels (positions),
// closed by the oracle.
inline Topology topo(LabelSet labels, std::initializer_list<std::pair<int, int>> leq) {
  oracle::Rel r = oracle::identity(labels.size());
  for (auto [i, j] : leq) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return from_rel(oracle::closure_by_squaring(r), labels);
}

inline const LabelSet L01{0, 1};
inline Topology chain01() { return Topology::chain(L01); }  // 0 <= 1
inline Topology coarse01() { return Topology::coarse(L01); }
inline Topology discrete01() { return Topology::discrete(L01); }
inline Topology point(std::uint32_t label) { return Topology::discrete(LabelSet{label}); }

inline OpenPair open_pair(const Topology& t, LabelSet y) { return OpenPair::from_labels(t, y); }

inline BasisKey tens(TensorKind kind, std::vector<BasisKey> factors) { return make_tensor(kind, std::move(factors)); }

inline std::vector<Topology> tops(int n) { return topologies_on(LabelSet::first_n(n)); }

inline std::vector<OpenPair> open_pairs(int n) {
  std::vector<OpenPair> out;
  for (const Topology& t : tops(n))
    for (Mask y : open_masks(t)) out.emplace_back(t, y);
  return out;
}

inline std::vector<AdmissiblePair> admissible_pairs(int n) {
  std::vector<AdmissiblePair> out;
  for (const Topology& t : tops(n))
    for (const Topology& tp : admissible_refinements(t)) out.emplace_back(t, tp);
  return out;
}

// Seeded random topology on the given labels.
inline Topology random_topology(std::mt19937& rng, const LabelSet& labels) {
  std::uniform_real_distribution<double> density(0.0, 0.6);
  return from_rel(oracle::random_relation(rng, labels.size(), density(rng)), labels);
}

inline Mask random_open(std::mt19937& rng, const Topology& t) {
  const auto opens = open_masks(t);
  return opens[std::uniform_int_distribution<std::size_t>(0, opens.size() - 1)(rng)];
}

}  // namespace testing_support
