#include "topobim/bialgebra.hpp"

#include <array>

#include "topobim/enumeration.hpp"
#include "topobim/error.hpp"
#include "topobim/fault_injection.hpp"

namespace topobim {
namespace {

[[noreturn]] void bad_argument(const std::string& what) { throw Error(ErrorCode::kMalformedInput, what); }

template <class T>
const T& expect(const BasisKey& k, const char* what) {
  if (!k.holds<T>()) bad_argument(std::string("expected ") + what);
  return k.as<T>();
}

// T = D_{X,T}: every relation is mutual.
bool is_equivalence(const Topology& t) { return t == finest_admissible(t); }

LinComb scalar(const Rational& q) { return LinComb(BasisKey(Topology()), q); }

}  // namespace

LinComb delta_external(const Topology& t) {
  LinComb out;
  for (Mask y : open_masks(t)) {
    if (y == t.full() && fault_is(Fault::kDeltaSkipsFullOpenSet)) continue;
    out.add_term(make_tensor(TensorKind::kSpecies, {restrict_mask(t, t.full() & ~y), restrict_mask(t, y)}), 1);
  }
  return out;
}

LinComb gamma_internal(const Topology& t) {
  LinComb out;
  for (const Topology& tp : admissible_refinements(t)) {
    out.add_term(make_tensor(TensorKind::kInternal, {tp, quotient(t, tp)}), 1);
  }
  return out;
}

Rational counit_internal(const Topology& t) {
  if (fault_is(Fault::kCounitIgnoresGrading)) return 1;
  return grading_d(t) == 0 ? 1 : 0;
}

Topology multiply(const Topology& a, const Topology& b) { return disjoint_union(a, b); }

OpenPair multiply(const OpenPair& a, const OpenPair& b) {
  return OpenPair::from_labels(disjoint_union(a.topology(), b.topology()),
                               a.open_labels().union_with(b.open_labels()));
}

AdmissiblePair multiply(const AdmissiblePair& a, const AdmissiblePair& b) {
  return AdmissiblePair(disjoint_union(a.base(), b.base()), disjoint_union(a.refinement(), b.refinement()));
}

BasisKey m_product(const BasisKey& a, const BasisKey& b) {
  if (a.value.index() != b.value.index()) {
    throw Error(ErrorCode::kKindMismatch, "cannot multiply keys from different spaces");
  }
  if (a.holds<Topology>()) return multiply(a.as<Topology>(), b.as<Topology>());
  if (a.holds<OpenPair>()) return multiply(a.as<OpenPair>(), b.as<OpenPair>());
  if (a.holds<AdmissiblePair>()) return multiply(a.as<AdmissiblePair>(), b.as<AdmissiblePair>());
  const Tensor& x = a.as<Tensor>();
  const Tensor& y = b.as<Tensor>();
  if (x.kind != y.kind || x.factors.size() != y.factors.size()) {
    throw Error(ErrorCode::kKindMismatch, "tensors of different shapes cannot be multiplied");
  }
  std::vector<BasisKey> factors;
  for (std::size_t i = 0; i < x.factors.size(); ++i) factors.push_back(m_product(x.factors[i], y.factors[i]));
  return make_tensor(x.kind, std::move(factors));
}

LinComb delta_D(const OpenPair& p) {
  const Topology& t = p.topology();
  const LabelSet& x = t.labels();
  LinComb out;
  // Y is open, so Z is open in T|_Y exactly when Z is open in T and Z is inside Y.
  for (Mask z : open_masks(t)) {
    if (!is_subset(z, p.open())) continue;
    if (z == 0 && fault_is(Fault::kDeltaDSkipsEmptyZ)) continue;
    const Topology tz = restrict_mask(t, z);
    OpenPair left(tz, tz.full());
    OpenPair right = OpenPair::from_labels(restrict_mask(t, t.full() & ~z), x.select(p.open() & ~z));
    if (fault_is(Fault::kDeltaDSwapsFactors)) std::swap(left, right);
    out.add_term(make_tensor(TensorKind::kSpecies, {left, right}), 1);
  }
  return out;
}

int grading_D(const OpenPair& p) { return popcount(p.open()); }

LinComb gamma_Dtilde(const AdmissiblePair& p) {
  const Topology& t = p.base();
  const Topology& tp = p.refinement();
  LinComb out;
  for (const Topology& tpp : admissible_refinements(tp)) {
    AdmissiblePair left(t, tpp);
    AdmissiblePair right(quotient(t, tpp), quotient(tp, tpp));
    out.add_term(make_tensor(TensorKind::kInternal, {left, right}), 1);
  }
  return out;
}

Rational counit_Dtilde(const AdmissiblePair& p) {
  return counit_internal(fault_is(Fault::kCounitPairUsesBase) ? p.base() : p.refinement());
}

int grading_Dtilde(const AdmissiblePair& p) { return grading_d(p.refinement()); }

Topology p2_projection(const AdmissiblePair& p) {
  return fault_is(Fault::kProjectionReturnsBase) ? p.base() : p.refinement();
}

LinComb phi_coaction(const OpenPair& p) {
  const Topology& t = p.topology();
  const Mask y = p.open();
  const Mask rest = t.full() & ~y;
  const Topology finest = finest_admissible(t);
  LinComb out;
  for (const Topology& tp : admissible_refinements(t)) {
    if (tp == finest && fault_is(Fault::kPhiOmitsFinestTerm)) continue;
    if (!is_equivalence(restrict_mask(tp, rest))) continue;
    if (!tp.is_open(y) || !tp.is_open(rest)) continue;
    const Topology q = fault_is(Fault::kPhiKeepsBaseTopology) ? t : quotient(t, tp);
    out.add_term(make_tensor(TensorKind::kInternal, {AdmissiblePair(t, tp), OpenPair(q, y)}), 1);
  }
  return out;
}

LinComb star_product(const OpenPair& a, const OpenPair& b) {
  const LabelSet rest = a.ground().minus(a.open_labels());
  const bool grounds_match =
      fault_is(Fault::kStarSubsetCondition) ? b.ground().is_subset_of(rest) : b.ground() == rest;
  if (!grounds_match) return {};
  if (b.topology() != restrict(a.topology(), b.ground())) return {};
  return LinComb(OpenPair::from_labels(a.topology(), a.open_labels().union_with(b.open_labels())));
}

Topology unquotient(const Topology& t1, const Topology& t1p, const Topology& t2p) {
  if (!is_admissible(t1p, t1)) {
    throw Error(ErrorCode::kNotAdmissible, "first refinement is not admissible for the base");
  }
  if (!is_admissible(t2p, quotient(t1, t1p))) {
    throw Error(ErrorCode::kNotAdmissible, "second refinement is not admissible for the quotient");
  }
  std::vector<Topology> found;
  for (const Topology& u : topologies_between(t1p, t1)) {
    if (is_admissible(t1p, u) && is_admissible(u, t1) && quotient(u, t1p) == t2p) found.push_back(u);
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::kLemmaViolation,
                "expected exactly one intermediate topology, found " + std::to_string(found.size()));
  }
  return found.front();
}

LinComb divtimes_product(const AdmissiblePair& a, const AdmissiblePair& b) {
  if (!fault_is(Fault::kDivtimesSkipsQuotientMatch) && b.base() != quotient(a.base(), a.refinement())) {
    return {};
  }
  return LinComb(AdmissiblePair(a.base(), unquotient(a.base(), a.refinement(), b.refinement())));
}

LinComb psi_action(const AdmissiblePair& a, const OpenPair& b) {
  if (!fault_is(Fault::kPsiSkipsQuotientMatch) && b.topology() != quotient(a.base(), a.refinement())) {
    return {};
  }
  return LinComb(OpenPair::from_labels(a.base(), b.open_labels()));
}

LinComb xi_map(const AdmissiblePair& a, const OpenPair& first, const OpenPair& second) {
  const LabelSet& x = a.ground();
  if (!first.ground().is_disjoint_from(second.ground()) || first.ground().union_with(second.ground()) != x) {
    throw Error(ErrorCode::kPartitionMismatch, first.ground().to_string() + " and " +
                                                   second.ground().to_string() + " do not partition " +
                                                   x.to_string());
  }
  if (fault_is(Fault::kXiIsIdentity)) {
    return LinComb(make_tensor(TensorKind::kInternalSpecies, {a, first, second}));
  }
  const Mask z = x.mask_of(first.open_labels());
  const Mask rest = full_mask(x.size()) & ~z;
  auto split = [z, rest](const Topology& t) {
    return disjoint_union(restrict_mask(t, z), restrict_mask(t, rest));
  };
  AdmissiblePair head(split(a.base()), split(a.refinement()));
  return LinComb(make_tensor(TensorKind::kInternalSpecies, {head, first, second}));
}

LinComb m13(const BasisKey& t1, const BasisKey& t2, const BasisKey& t3, const BasisKey& t4) {
  return LinComb(make_tensor(TensorKind::kInternalSpecies, {m_product(t1, t3), t2, t4}));
}

LinComb xi_linear(const LinComb& v) {
  return extend_linear(
      [](const BasisKey& k) {
        const Tensor& t = expect<Tensor>(k, "an internal_species tensor");
        if (t.factors.size() != 3) bad_argument("xi expects three factors");
        return xi_map(expect<AdmissiblePair>(t.factors[0], "an admissible pair"),
                      expect<OpenPair>(t.factors[1], "an open pair"),
                      expect<OpenPair>(t.factors[2], "an open pair"));
      },
      v);
}

LinComb m13_linear(const LinComb& v) {
  return extend_linear(
      [](const BasisKey& k) {
        const Tensor& t = expect<Tensor>(k, "a four-factor tensor");
        if (t.factors.size() != 4) bad_argument("m13 expects four factors");
        return m13(t.factors[0], t.factors[1], t.factors[2], t.factors[3]);
      },
      v);
}

LinComb delta_external_key(const BasisKey& k) { return delta_external(expect<Topology>(k, "a topology")); }
LinComb gamma_internal_key(const BasisKey& k) { return gamma_internal(expect<Topology>(k, "a topology")); }
LinComb delta_D_key(const BasisKey& k) { return delta_D(expect<OpenPair>(k, "an open pair")); }
LinComb gamma_Dtilde_key(const BasisKey& k) {
  return gamma_Dtilde(expect<AdmissiblePair>(k, "an admissible pair"));
}
LinComb phi_coaction_key(const BasisKey& k) { return phi_coaction(expect<OpenPair>(k, "an open pair")); }
LinComb p2_projection_key(const BasisKey& k) {
  return LinComb(p2_projection(expect<AdmissiblePair>(k, "an admissible pair")));
}
Rational counit_internal_key(const BasisKey& k) { return counit_internal(expect<Topology>(k, "a topology")); }
Rational counit_Dtilde_key(const BasisKey& k) {
  return counit_Dtilde(expect<AdmissiblePair>(k, "an admissible pair"));
}

namespace {

struct MapInfo {
  MapName id;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<MapInfo, 17> kMaps{{
    {MapName::kDeltaExternal, "delta_external", 1},
    {MapName::kGammaInternal, "gamma_internal", 1},
    {MapName::kCounitInternal, "counit_internal", 1},
    {MapName::kMProduct, "m_product", 2},
    {MapName::kDeltaD, "delta_D", 1},
    {MapName::kGammaDtilde, "gamma_Dtilde", 1},
    {MapName::kCounitDtilde, "counit_Dtilde", 1},
    {MapName::kP2Projection, "p2_projection", 1},
    {MapName::kPhiCoaction, "phi_coaction", 1},
    {MapName::kStarProduct, "star_product", 2},
    {MapName::kUnquotient, "unquotient", 3},
    {MapName::kDivtimesProduct, "divtimes_product", 2},
    {MapName::kPsiAction, "psi_action", 2},
    {MapName::kXiMap, "xi_map", 3},
    {MapName::kM13, "m13", 4},
    {MapName::kQuotient, "quotient", 2},
    {MapName::kFinestAdmissible, "finest_admissible", 1},
}};

const MapInfo& info(MapName m) {
  for (const MapInfo& i : kMaps) {
    if (i.id == m) return i;
  }
  throw Error(ErrorCode::kUnknownMap, "unregistered map");
}

}  // namespace

const std::vector<MapName>& all_map_names() {
  static const std::vector<MapName> names = [] {
    std::vector<MapName> v;
    for (const MapInfo& i : kMaps) v.push_back(i.id);
    return v;
  }();
  return names;
}

std::string_view map_name(MapName m) { return info(m).name; }

std::optional<MapName> map_from_name(std::string_view name) {
  for (const MapInfo& i : kMaps) {
    if (i.name == name) return i.id;
  }
  return std::nullopt;
}

LinComb apply_map(MapName m, const std::vector<BasisKey>& raw) {
  const MapInfo& mi = info(m);
  std::vector<BasisKey> args = raw;
  // xi_map and m13 accept their tensor whole.
  if (args.size() == 1 && mi.arity > 1 && args[0].holds<Tensor>() &&
      (m == MapName::kXiMap || m == MapName::kM13)) {
    args = args[0].as<Tensor>().factors;
  }
  if (args.size() != mi.arity) {
    bad_argument(std::string(mi.name) + " takes " + std::to_string(mi.arity) + " argument(s), got " +
                 std::to_string(args.size()));
  }
  switch (m) {
    case MapName::kDeltaExternal: return delta_external_key(args[0]);
    case MapName::kGammaInternal: return gamma_internal_key(args[0]);
    case MapName::kCounitInternal: return scalar(counit_internal_key(args[0]));
    case MapName::kMProduct: return LinComb(m_product(args[0], args[1]));
    case MapName::kDeltaD: return delta_D_key(args[0]);
    case MapName::kGammaDtilde: return gamma_Dtilde_key(args[0]);
    case MapName::kCounitDtilde: return scalar(counit_Dtilde_key(args[0]));
    case MapName::kP2Projection: return p2_projection_key(args[0]);
    case MapName::kPhiCoaction: return phi_coaction_key(args[0]);
    case MapName::kStarProduct:
      return star_product(expect<OpenPair>(args[0], "an open pair"), expect<OpenPair>(args[1], "an open pair"));
    case MapName::kUnquotient:
      return LinComb(unquotient(expect<Topology>(args[0], "a topology"), expect<Topology>(args[1], "a topology"),
                                expect<Topology>(args[2], "a topology")));
    case MapName::kDivtimesProduct:
      return divtimes_product(expect<AdmissiblePair>(args[0], "an admissible pair"),
                              expect<AdmissiblePair>(args[1], "an admissible pair"));
    case MapName::kPsiAction:
      return psi_action(expect<AdmissiblePair>(args[0], "an admissible pair"),
                        expect<OpenPair>(args[1], "an open pair"));
    case MapName::kXiMap:
      return xi_map(expect<AdmissiblePair>(args[0], "an admissible pair"), expect<OpenPair>(args[1], "an open pair"),
                    expect<OpenPair>(args[2], "an open pair"));
    case MapName::kM13: return m13(args[0], args[1], args[2], args[3]);
    case MapName::kQuotient:
      return LinComb(quotient(expect<Topology>(args[0], "a topology"), expect<Topology>(args[1], "a topology")));
    case MapName::kFinestAdmissible: return LinComb(finest_admissible(expect<Topology>(args[0], "a topology")));
  }
  throw Error(ErrorCode::kUnknownMap, "unregistered map");
}

LinComb apply_map_linear(MapName m, const LinComb& v) {
  const std::size_t arity = info(m).arity;
  return extend_linear(
      [m, arity](const BasisKey& k) {
        if (arity > 1 && k.holds<Tensor>()) return apply_map(m, k.as<Tensor>().factors);
        return apply_map(m, {k});
      },
      v);
}

}  // namespace topobim
