#include <gtest/gtest.h>

#include "support.hpp"

using namespace topobim;
using namespace testing_support;

namespace {

constexpr auto kSp = TensorKind::kSpecies;
constexpr auto kIn = TensorKind::kInternal;

LinComb sum(std::initializer_list<BasisKey> keys) {
  LinComb v;
  for (const BasisKey& k : keys) v.add_term(k, 1);
  return v;
}

const Topology kEmpty;
const OpenPair kUnitPair;

// ---- topologies --------------------------------------------------------

TEST(DeltaExternal, Examples) {
  EXPECT_EQ(delta_external(kEmpty), sum({tens(kSp, {kEmpty, kEmpty})}));
  EXPECT_EQ(delta_external(chain01()),
            sum({tens(kSp, {chain01(), kEmpty}), tens(kSp, {point(0), point(1)}), tens(kSp, {kEmpty, chain01()})}));
  EXPECT_EQ(delta_external(coarse01()), sum({tens(kSp, {coarse01(), kEmpty}), tens(kSp, {kEmpty, coarse01()})}));
}

TEST(DeltaExternal, MatchesOpenSetOracle) {
  for (int n = 0; n <= 4; ++n)
    for (const Topology& t : tops(n)) {
      const oracle::Family f = oracle::family_of(to_rel(t));
      std::multiset<std::pair<oracle::Rel, oracle::Rel>> want, got;
      for (unsigned y = 0; y < f.size(); ++y)
        if (f[y]) want.emplace(oracle::restrict(to_rel(t), t.full() & ~y), oracle::restrict(to_rel(t), y));
      for (const auto& [k, c] : delta_external(t).terms()) {
        ASSERT_EQ(c, 1);
        got.emplace(to_rel(k.as<Tensor>().factors[0].as<Topology>()), to_rel(k.as<Tensor>().factors[1].as<Topology>()));
      }
      ASSERT_EQ(got, want);
    }
}

TEST(GammaInternal, Examples) {
  EXPECT_EQ(gamma_internal(chain01()), sum({tens(kIn, {discrete01(), chain01()}), tens(kIn, {chain01(), coarse01()})}));
  EXPECT_EQ(gamma_internal(coarse01()), sum({tens(kIn, {coarse01(), coarse01()})}));
  for (int n = 0; n <= 4; ++n) {
    const Topology d = Topology::discrete(LabelSet::first_n(n));
    EXPECT_EQ(gamma_internal(d), sum({tens(kIn, {d, d})}));
  }
}

TEST(GammaInternal, TermCountMatchesOracle) {
  for (int n = 0; n <= 4; ++n) {
    const auto rels = oracle::all_relations(n);
    for (const Topology& t : tops(n)) {
      std::size_t want = 0;
      for (const oracle::Rel& r : rels) want += oracle::admissible(r, to_rel(t));
      ASSERT_EQ(gamma_internal(t).size(), want);
    }
  }
}

TEST(Counit, Examples) {
  EXPECT_EQ(counit_internal(discrete01()), 1);
  EXPECT_EQ(counit_internal(chain01()), 0);
  EXPECT_EQ(contract_factor(gamma_internal(chain01()), 0, counit_internal_key), LinComb(chain01()));
  EXPECT_EQ(contract_factor(gamma_internal(chain01()), 1, counit_internal_key), LinComb(chain01()));
}

// Delta and Gamma on T are multiplicative for the disjoint-union product.
TEST(Multiplicativity, DeltaAndGamma) {
  const LabelSet x = LabelSet::first_n(4);
  for (Mask s = 0; s <= full_mask(4); ++s) {
    const auto left = topologies_on(x.select(s));
    const auto right = topologies_on(x.select(full_mask(4) & ~s));
    for (const Topology& a : left)
      for (const Topology& b : right)
        for (auto f : {&delta_external, &gamma_internal}) {
          const LinComb fa = f(a), fb = f(b);
          LinComb prod;
          for (const auto& [ka, ca] : fa.terms())
            for (const auto& [kb, cb] : fb.terms()) prod.add_term(m_product(ka, kb), ca * cb);
          ASSERT_EQ(f(multiply(a, b)), prod);
        }
  }
}

// ---- products ----------------------------------------------------------

TEST(MProduct, Examples) {
  const Topology cp = disjoint_union(chain01(), point(2));
  EXPECT_EQ(m_product(open_pair(chain01(), LabelSet{1}), open_pair(point(2), LabelSet{})),
            BasisKey(open_pair(cp, LabelSet{1})));
  EXPECT_EQ(m_product(open_pair(chain01(), LabelSet{1}), kUnitPair), BasisKey(open_pair(chain01(), LabelSet{1})));
  EXPECT_EQ(m_product(AdmissiblePair(chain01(), discrete01()), AdmissiblePair(point(2), point(2))),
            BasisKey(AdmissiblePair(cp, Topology::discrete(LabelSet::first_n(3)))));
  try {
    m_product(chain01(), point(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelCollision);
  }
  try {
    m_product(chain01(), open_pair(point(2), LabelSet{}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKindMismatch);
  }
}

// ---- doubling by open sets ------------------------------------------------

TEST(DeltaD, Examples) {
  const OpenPair p = open_pair(chain01(), LabelSet{1});
  EXPECT_EQ(delta_D(p), sum({tens(kSp, {kUnitPair, p}),
                             tens(kSp, {open_pair(point(1), LabelSet{1}), open_pair(point(0), LabelSet{})})}));
  for (const Topology& t : tops(3)) {
    const OpenPair q(t, 0);
    EXPECT_EQ(delta_D(q), sum({tens(kSp, {kUnitPair, q})}));
  }
  for (const auto& [k, c] : delta_D(open_pair(Topology::discrete(LabelSet::first_n(3)), LabelSet{0, 2})).terms()) {
    const auto& f = k.as<Tensor>().factors;
    EXPECT_EQ(grading_D(f[0].as<OpenPair>()) + grading_D(f[1].as<OpenPair>()), 2);
  }
  try {
    delta_D(OpenPair(chain01(), 0b01));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOpen);
  }
}

TEST(DeltaD, NotCounital) {
  for (int n = 0; n <= 3; ++n)
    for (const OpenPair& p : open_pairs(n)) {
      const LinComb d = delta_D(p);
      ASSERT_EQ(d.coeff(tens(kSp, {kUnitPair, p})), 1);
      ASSERT_EQ(d.coeff(tens(kSp, {p, kUnitPair})), p.open() == p.topology().full() ? 1 : 0);
    }
}

// ---- doubling by admissible refinements -----------------------------------

TEST(GammaDtilde, Examples) {
  const AdmissiblePair cd(chain01(), discrete01());
  EXPECT_EQ(gamma_Dtilde(cd), sum({tens(kIn, {cd, cd})}));
  // T'' ranges over {discrete, chain}:
  //   discrete: (chain, disc) (x) (chain/disc, chain/disc) = (chain, disc) (x) (chain, chain)
  //   chain:    (chain, chain) (x) (chain/chain, chain/chain) = (chain, chain) (x) (coarse, coarse)
  const AdmissiblePair cc(chain01(), chain01());
  EXPECT_EQ(gamma_Dtilde(cc), sum({tens(kIn, {cd, cc}), tens(kIn, {cc, AdmissiblePair(coarse01(), coarse01())})}));
  EXPECT_EQ(contract_factor(gamma_Dtilde(cc), 1, counit_Dtilde_key), LinComb(cc));
  EXPECT_EQ(contract_factor(gamma_Dtilde(cc), 0, counit_Dtilde_key), LinComb(cc));
}

TEST(GammaDtilde, OutputsAreAdmissible) {
  for (int n = 0; n <= 4; ++n)
    for (const AdmissiblePair& p : admissible_pairs(n))
      for (const auto& [k, c] : gamma_Dtilde(p).terms()) {
        for (const BasisKey& f : k.as<Tensor>().factors) {
          const auto& q = f.as<AdmissiblePair>();
          ASSERT_TRUE(oracle::admissible(to_rel(q.refinement()), to_rel(q.base())));
        }
      }
}

TEST(P2, Examples) {
  EXPECT_EQ(p2_projection(AdmissiblePair(chain01(), discrete01())), discrete01());
  const AdmissiblePair cc(chain01(), chain01());
  EXPECT_EQ(map_factors(gamma_Dtilde(cc), {p2_projection_key, p2_projection_key}, kIn),
            gamma_internal(p2_projection(cc)));
  const AdmissiblePair a(chain01(), discrete01()), b(point(2), point(2));
  EXPECT_EQ(p2_projection(multiply(a, b)), multiply(p2_projection(a), p2_projection(b)));
}

// ---- coaction ----------------------------------------------------------

TEST(Phi, Examples) {
  EXPECT_EQ(phi_coaction(open_pair(chain01(), LabelSet{1})),
            sum({tens(kIn, {AdmissiblePair(chain01(), discrete01()), open_pair(chain01(), LabelSet{1})})}));
  EXPECT_EQ(phi_coaction(open_pair(coarse01(), L01)),
            sum({tens(kIn, {AdmissiblePair(coarse01(), coarse01()), open_pair(coarse01(), L01)})}));
  for (const OpenPair& p : open_pairs(4)) {
    if (p.open() != 0) continue;
    for (const auto& [k, c] : phi_coaction(p).terms())
      ASSERT_EQ(grading_d(k.as<Tensor>().factors[0].as<AdmissiblePair>().refinement()), 0);
  }
}

// Oracle: every T' admissible for T, symmetric on X\Y, with Y open in the
// oracle quotient (checked directly, not via the open-complement lemma).
TEST(Phi, MatchesDirectDefinition) {
  for (int n = 0; n <= 4; ++n) {
    const auto rels = oracle::all_relations(n);
    for (const OpenPair& p : open_pairs(n)) {
      const oracle::Rel t = to_rel(p.topology());
      std::set<oracle::Rel> want;
      for (const oracle::Rel& tp : rels) {
        if (!oracle::admissible(tp, t)) continue;
        const oracle::Rel rest = oracle::restrict(tp, p.topology().full() & ~p.open());
        bool symmetric = true;
        for (std::size_t i = 0; i < rest.size(); ++i)
          for (std::size_t j = 0; j < rest.size(); ++j) symmetric = symmetric && rest[i][j] == rest[j][i];
        if (!symmetric) continue;
        if (!oracle::family_of(oracle::quotient(t, tp))[p.open()]) continue;
        want.insert(tp);
      }
      std::set<oracle::Rel> got;
      for (const auto& [k, c] : phi_coaction(p).terms()) {
        const auto& f = k.as<Tensor>().factors;
        const auto& a = f[0].as<AdmissiblePair>();
        ASSERT_EQ(f[1].as<OpenPair>(), OpenPair(quotient(a.base(), a.refinement()), p.open()));
        got.insert(to_rel(a.refinement()));
      }
      ASSERT_EQ(got, want);
    }
  }
}

// ---- dual products --------------------------------------------------------

TEST(Star, Examples) {
  const OpenPair a = open_pair(chain01(), LabelSet{1});
  EXPECT_EQ(star_product(a, open_pair(point(0), LabelSet{})), LinComb(a));
  EXPECT_TRUE(star_product(a, open_pair(point(2), LabelSet{})).empty());
  // 3-chain 0<=1<=2 with Y1={2}, Y2={1}, Y3={}.
  const Topology c3 = Topology::chain(LabelSet::first_n(3));
  const LinComb x(open_pair(c3, LabelSet{2}));
  const LinComb y(open_pair(Topology::chain(L01), LabelSet{1}));
  const LinComb z(open_pair(point(0), LabelSet{}));
  auto star = [](const LinComb& u, const LinComb& v) {
    LinComb out;
    for (const auto& [ka, ca] : u.terms())
      for (const auto& [kb, cb] : v.terms()) out += (ca * cb) * star_product(ka.as<OpenPair>(), kb.as<OpenPair>());
    return out;
  };
  EXPECT_EQ(star(star(x, y), z), star(x, star(y, z)));
  EXPECT_EQ(star(star(x, y), z), LinComb(open_pair(c3, LabelSet{1, 2})));
}

TEST(Unquotient, Examples) {
  EXPECT_EQ(unquotient(chain01(), chain01(), coarse01()), chain01());
  for (int n = 0; n <= 3; ++n)
    for (const AdmissiblePair& p : admissible_pairs(n)) {
      const Topology q = quotient(p.base(), p.refinement());
      for (const Topology& u : admissible_refinements(q))
        ASSERT_EQ(quotient(unquotient(p.base(), p.refinement(), u), p.refinement()), u);
    }
  try {
    unquotient(chain01(), chain01(), discrete01());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
}

TEST(Divtimes, Examples) {
  const AdmissiblePair cc(chain01(), chain01());
  EXPECT_EQ(divtimes_product(cc, AdmissiblePair(coarse01(), coarse01())), LinComb(cc));
  EXPECT_TRUE(divtimes_product(AdmissiblePair(chain01(), discrete01()), AdmissiblePair(coarse01(), coarse01())).empty());
}

TEST(Psi, Examples) {
  const AdmissiblePair cc(chain01(), chain01());
  EXPECT_EQ(psi_action(cc, open_pair(coarse01(), L01)), LinComb(open_pair(chain01(), L01)));
  EXPECT_TRUE(psi_action(AdmissiblePair(chain01(), discrete01()), open_pair(coarse01(), L01)).empty());
  // Action axiom on ((chain,disc), (chain,chain), (coarse, X)).
  const AdmissiblePair cd(chain01(), discrete01());
  const OpenPair y = open_pair(coarse01(), L01);
  LinComb lhs, rhs;
  for (const auto& [k, c] : divtimes_product(cd, cc).terms()) lhs += psi_action(k.as<AdmissiblePair>(), y);
  for (const auto& [k, c] : psi_action(cc, y).terms()) rhs += psi_action(cd, k.as<OpenPair>());
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs, LinComb(open_pair(chain01(), L01)));
}

// ---- xi and m13 -----------------------------------------------------------

TEST(Xi, Examples) {
  const AdmissiblePair a(chain01(), discrete01());
  // Z = X leaves the first factor alone.
  EXPECT_EQ(xi_map(a, open_pair(chain01(), L01), kUnitPair),
            LinComb(tens(TensorKind::kInternalSpecies, {a, open_pair(chain01(), L01), kUnitPair})));
  const OpenPair first = open_pair(point(1), LabelSet{1});
  const OpenPair second = open_pair(point(0), LabelSet{});
  EXPECT_EQ(xi_map(a, first, second),
            LinComb(tens(TensorKind::kInternalSpecies, {AdmissiblePair(discrete01(), discrete01()), first, second})));
  try {
    xi_map(a, first, open_pair(point(2), LabelSet{}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartitionMismatch);
  }
}

TEST(Xi, OutputAdmissibleForAllSplits) {
  for (int n = 0; n <= 3; ++n) {
    const LabelSet x = LabelSet::first_n(n);
    for (const AdmissiblePair& a : admissible_pairs(n))
      for (Mask z : open_masks(a.base())) {
        const OpenPair first = open_pair(restrict_mask(a.base(), z), x.select(z));
        const OpenPair second(restrict_mask(a.base(), full_mask(n) & ~z), 0);
        for (const auto& [k, c] : xi_map(a, first, second).terms()) {
          const auto& out = k.as<Tensor>().factors[0].as<AdmissiblePair>();
          ASSERT_TRUE(oracle::admissible(to_rel(out.refinement()), to_rel(out.base())));
        }
      }
  }
}

TEST(M13, Examples) {
  EXPECT_EQ(m13(discrete01(), chain01(), point(2), point(2)),
            LinComb(tens(TensorKind::kInternalSpecies,
                         {Topology::discrete(LabelSet::first_n(3)), chain01(), point(2)})));
  EXPECT_EQ(m13(chain01(), chain01(), point(2), point(2)),
            LinComb(tens(TensorKind::kInternalSpecies,
                         {disjoint_union(chain01(), point(2)), chain01(), point(2)})));
  const AdmissiblePair cd(chain01(), discrete01()), pp(point(2), point(2));
  const LinComb r = m13(cd, open_pair(chain01(), LabelSet{}), pp, open_pair(point(2), LabelSet{}));
  EXPECT_EQ(r.terms().begin()->first.as<Tensor>().factors[0],
            BasisKey(AdmissiblePair(disjoint_union(chain01(), point(2)), Topology::discrete(LabelSet::first_n(3)))));
  try {
    m13(chain01(), chain01(), point(1), point(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelCollision);
  }
}

// ---- reflection -----------------------------------------------------------

TEST(MapNames, RoundTripAndUnique) {
  std::set<std::string_view> names;
  for (MapName m : all_map_names()) {
    EXPECT_TRUE(names.insert(map_name(m)).second);
    EXPECT_EQ(map_from_name(map_name(m)), m);
  }
  EXPECT_FALSE(map_from_name("nosuch").has_value());
}

TEST(ApplyMap, DispatchAndArity) {
  EXPECT_EQ(apply_map(MapName::kGammaInternal, {chain01()}), gamma_internal(chain01()));
  EXPECT_EQ(apply_map(MapName::kCounitInternal, {discrete01()}), LinComb(kEmpty));
  EXPECT_EQ(apply_map(MapName::kQuotient, {chain01(), chain01()}), LinComb(coarse01()));
  EXPECT_EQ(apply_map(MapName::kFinestAdmissible, {chain01()}), LinComb(discrete01()));
  EXPECT_TRUE(apply_map(MapName::kStarProduct, {open_pair(chain01(), LabelSet{1}), open_pair(point(2), LabelSet{})})
                  .empty());
  try {
    apply_map(MapName::kGammaInternal, {chain01(), chain01()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
  try {
    apply_map(MapName::kDeltaD, {chain01()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
  // Linear version: a tensor key supplies the arguments.
  const LinComb v = tensor(LinComb(chain01()), LinComb(point(2), 3), kSp);
  EXPECT_EQ(apply_map_linear(MapName::kMProduct, v), LinComb(disjoint_union(chain01(), point(2)), 3));
  EXPECT_EQ(apply_map_linear(MapName::kGammaInternal, LinComb(chain01()) + LinComb(coarse01())),
            gamma_internal(chain01()) + gamma_internal(coarse01()));
}

}  // namespace
