#include "topobim/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "topobim/bialgebra.hpp"
#include "topobim/enumeration.hpp"
#include "topobim/error.hpp"

namespace topobim {
namespace {

struct Failure {
  Json counterexample;
  std::string detail;
};

struct Outcome {
  std::uint64_t checked = 0;
  std::optional<Failure> failure;
};

using Probe = std::function<std::optional<Failure>(std::size_t)>;
using Describe = std::function<Json(std::size_t)>;

// Runs probe(i) for i < count. Exceptions count as failures. With several
// jobs the reported failure is still the one with the smallest index.
Outcome sweep(std::size_t count, const Probe& probe, const Describe& describe, int jobs) {
  auto run_one = [&](std::size_t i) -> std::optional<Failure> {
    try {
      return probe(i);
    } catch (const std::exception& e) {
      return Failure{Json{{"input", describe(i)}}, e.what()};
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(count, 64))));
  std::vector<std::pair<std::size_t, std::optional<Failure>>> firsts(static_cast<std::size_t>(jobs),
                                                                      {count, std::nullopt});
  auto worker = [&](int t) {
    for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) {
      if (auto f = run_one(i)) {
        firsts[static_cast<std::size_t>(t)] = {i, std::move(f)};
        return;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  auto best = std::min_element(firsts.begin(), firsts.end(),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
  Outcome out;
  if (best->second) {
    out.checked = best->first + 1;
    out.failure = std::move(best->second);
  } else {
    out.checked = count;
  }
  return out;
}

std::optional<Failure> expect_equal(const Json& input, const LinComb& lhs, const LinComb& rhs,
                                    const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return Failure{Json{{"input", input}, {"lhs", lincomb_to_json(lhs)}, {"rhs", lincomb_to_json(rhs)}}, what};
}

std::optional<Failure> expect_true(const Json& input, bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return Failure{Json{{"input", input}}, what};
}

Json tuple_json(std::initializer_list<BasisKey> keys) {
  Json out = Json::array();
  for (const BasisKey& k : keys) out.push_back(key_to_json(k));
  return out;
}

std::vector<Topology> tops(const LabelSet& x) { return topologies_on(x); }

std::vector<OpenPair> open_pairs_on(const LabelSet& x) {
  std::vector<OpenPair> out;
  for (const Topology& t : tops(x)) {
    for (Mask y : open_masks(t)) out.emplace_back(t, y);
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs_on(const LabelSet& x) {
  std::vector<AdmissiblePair> out;
  for (const Topology& t : tops(x)) {
    for (const Topology& tp : admissible_refinements(t)) out.emplace_back(t, tp);
  }
  return out;
}

template <class Key>
Describe describe_key(const std::vector<Key>& items) {
  return [&items](std::size_t i) { return key_to_json(items[i]); };
}

// Coassociativity of a coproduct whose image tensors have kind `kind`.
template <class Key>
Outcome coassociativity(const std::vector<Key>& items, const BasisMap& delta, TensorKind kind, int jobs) {
  return sweep(
      items.size(),
      [&](std::size_t i) {
        const LinComb d = delta(items[i]);
        return expect_equal(key_to_json(items[i]), map_factor(d, 0, delta, kind), map_factor(d, 1, delta, kind),
                            "(D (x) id) D != (id (x) D) D");
      },
      describe_key(items), jobs);
}

// Both counit identities for a coproduct.
template <class Key>
Outcome counitality(const std::vector<Key>& items, const BasisMap& delta, const BasisFunctional& eps, int jobs) {
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const LinComb d = delta(items[i]);
        const LinComb id(items[i]);
        if (auto f = expect_equal(key_to_json(items[i]), contract_factor(d, 0, eps), id, "(eps (x) id) D != id")) {
          return f;
        }
        return expect_equal(key_to_json(items[i]), contract_factor(d, 1, eps), id, "(id (x) eps) D != id");
      },
      describe_key(items), jobs);
}

// Every (left, right) with left on S and right on X\S, over all S.
template <class Key, class Gen>
std::vector<std::pair<Key, Key>> splits(const LabelSet& x, Gen gen) {
  std::vector<std::pair<Key, Key>> out;
  const Mask full = full_mask(x.size());
  for (Mask s = 0; s <= full; ++s) {
    const auto left = gen(x.select(s));
    const auto right = gen(x.select(full & ~s));
    for (const Key& a : left) {
      for (const Key& b : right) out.emplace_back(a, b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks. Each takes the ground set {0..n-1}.

Outcome coassoc_delta_T(const LabelSet& x, int jobs) {
  return coassociativity(tops(x), delta_external_key, TensorKind::kSpecies, jobs);
}

Outcome coassoc_gamma_T(const LabelSet& x, int jobs) {
  return coassociativity(tops(x), gamma_internal_key, TensorKind::kInternal, jobs);
}

Outcome compat_T(const LabelSet& x, int jobs) {
  const auto items = tops(x);
  return sweep(
      items.size(),
      [&](std::size_t i) {
        const LinComb lhs = map_factor(gamma_internal(items[i]), 1, delta_external_key, TensorKind::kInternalSpecies);
        const LinComb rhs = m13_linear(
            map_factors(delta_external(items[i]), {gamma_internal_key, gamma_internal_key},
                        TensorKind::kSpeciesInternal));
        return expect_equal(key_to_json(items[i]), lhs, rhs, "(id (x) Delta) Gamma != m13 (Gamma (x) Gamma) Delta");
      },
      describe_key(items), jobs);
}

Outcome coassoc_delta_D(const LabelSet& x, int jobs) {
  return coassociativity(open_pairs_on(x), delta_D_key, TensorKind::kSpecies, jobs);
}

Outcome noncounital_D(const LabelSet& x, int jobs) {
  const auto items = open_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const OpenPair& p = items[i];
        const LinComb d = delta_D(p);
        const Json in = key_to_json(p);
        const Rational left_unit = d.coeff(make_tensor(TensorKind::kSpecies, {OpenPair(), p}));
        if (auto f = expect_true(in, left_unit == 1, "coefficient of 1 (x) (T,Y) is " + rational_to_string(left_unit))) {
          return f;
        }
        const Rational right_unit = d.coeff(make_tensor(TensorKind::kSpecies, {p, OpenPair()}));
        const Rational want = p.open() == p.topology().full() ? 1 : 0;
        return expect_true(in, right_unit == want,
                           "coefficient of (T,Y) (x) 1 is " + rational_to_string(right_unit) + ", expected " +
                               rational_to_string(want));
      },
      describe_key(items), jobs);
}

Outcome coassoc_gamma_Dt(const LabelSet& x, int jobs) {
  return coassociativity(admissible_pairs_on(x), gamma_Dtilde_key, TensorKind::kInternal, jobs);
}

Outcome counit_gamma_Dt(const LabelSet& x, int jobs) {
  return counitality(admissible_pairs_on(x), gamma_Dtilde_key, counit_Dtilde_key, jobs);
}

Outcome p2_morphism(const LabelSet& x, int jobs) {
  const auto items = admissible_pairs_on(x);
  const Outcome coalgebra = sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const AdmissiblePair& p = items[i];
        const Json in = key_to_json(p);
        const LinComb lhs =
            map_factors(gamma_Dtilde(p), {p2_projection_key, p2_projection_key}, TensorKind::kInternal);
        if (auto f = expect_equal(in, lhs, gamma_internal(p2_projection(p)), "(P2 (x) P2) Gamma~ != Gamma P2")) {
          return f;
        }
        return expect_true(in, counit_Dtilde(p) == counit_internal(p2_projection(p)), "eps P2 != eps");
      },
      describe_key(items), jobs);
  if (coalgebra.failure) return coalgebra;
  const auto pairs = splits<AdmissiblePair>(x, admissible_pairs_on);
  Outcome algebra = sweep(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [a, b] = pairs[i];
        return expect_equal(tuple_json({a, b}), LinComb(p2_projection(multiply(a, b))),
                            LinComb(multiply(p2_projection(a), p2_projection(b))), "P2(ab) != P2(a) P2(b)");
      },
      [&](std::size_t i) { return tuple_json({pairs[i].first, pairs[i].second}); }, jobs);
  algebra.checked += coalgebra.checked;
  return algebra;
}

Outcome restriction_admissible(const LabelSet& x, int jobs) {
  const auto items = admissible_pairs_on(x);
  const Mask full = full_mask(x.size());
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const AdmissiblePair& p = items[i];
        for (Mask w = 0; w <= full; ++w) {
          if (!is_admissible(restrict_mask(p.refinement(), w), restrict_mask(p.base(), w))) {
            return Failure{Json{{"input", key_to_json(p)}, {"subset", x.select(w).ids()}},
                           "restriction to the subset is not admissible"};
          }
        }
        return std::nullopt;
      },
      describe_key(items), jobs);
}

Outcome comodule_phi(const LabelSet& x, int jobs) {
  const auto items = open_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const OpenPair& p = items[i];
        const Json in = key_to_json(p);
        const LinComb phi = phi_coaction(p);
        if (auto f = expect_equal(in, map_factor(phi, 0, gamma_Dtilde_key, TensorKind::kInternal),
                                  map_factor(phi, 1, phi_coaction_key, TensorKind::kInternal),
                                  "(Gamma~ (x) id) Phi != (id (x) Phi) Phi")) {
          return f;
        }
        return expect_equal(in, contract_factor(phi, 0, counit_Dtilde_key), LinComb(p), "(eps (x) id) Phi != id");
      },
      describe_key(items), jobs);
}

Outcome phi_monoid(const LabelSet& x, int jobs) {
  const auto pairs = splits<OpenPair>(x, open_pairs_on);
  return sweep(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [a, b] = pairs[i];
        LinComb rhs;
        const LinComb pa = phi_coaction(a);
        const LinComb pb = phi_coaction(b);
        for (const auto& [ka, ca] : pa.terms()) {
          for (const auto& [kb, cb] : pb.terms()) rhs.add_term(m_product(ka, kb), ca * cb);
        }
        return expect_equal(tuple_json({a, b}), phi_coaction(multiply(a, b)), rhs, "Phi(ab) != Phi(a) Phi(b)");
      },
      [&](std::size_t i) { return tuple_json({pairs[i].first, pairs[i].second}); }, jobs);
}

LinComb star_linear(const LinComb& u, const LinComb& v) {
  LinComb out;
  for (const auto& [ka, ca] : u.terms()) {
    for (const auto& [kb, cb] : v.terms()) {
      LinComb s = star_product(ka.as<OpenPair>(), kb.as<OpenPair>());
      s *= ca * cb;
      out += s;
    }
  }
  return out;
}

Outcome star_assoc(const LabelSet& x, int jobs) {
  // a lives on X; b and c on any subset of X.
  const auto first = open_pairs_on(x);
  std::vector<OpenPair> any;
  for (Mask s = 0; s <= full_mask(x.size()); ++s) {
    for (OpenPair& p : open_pairs_on(x.select(s))) any.push_back(std::move(p));
  }
  const std::size_t per_a = any.size() * any.size();
  return sweep(
      first.size() * per_a,
      [&](std::size_t i) {
        const LinComb a(first[i / per_a]);
        const LinComb b(any[(i % per_a) / any.size()]);
        const LinComb c(any[i % any.size()]);
        const LinComb lhs = star_linear(star_linear(a, b), c);
        const LinComb rhs = star_linear(a, star_linear(b, c));
        if (lhs == rhs) return std::optional<Failure>();
        return expect_equal(tuple_json({first[i / per_a], any[(i % per_a) / any.size()], any[i % any.size()]}),
                            lhs, rhs, "(a * b) * c != a * (b * c)");
      },
      [&](std::size_t i) {
        return tuple_json({first[i / per_a], any[(i % per_a) / any.size()], any[i % any.size()]});
      },
      jobs);
}

template <class A, class B, class F>
LinComb bilinear(const LinComb& u, const LinComb& v, F f) {
  LinComb out;
  for (const auto& [ka, ca] : u.terms()) {
    for (const auto& [kb, cb] : v.terms()) {
      LinComb s = f(ka.template as<A>(), kb.template as<B>());
      s *= ca * cb;
      out += s;
    }
  }
  return out;
}

LinComb divtimes_linear(const LinComb& u, const LinComb& v) {
  return bilinear<AdmissiblePair, AdmissiblePair>(u, v, divtimes_product);
}

LinComb psi_linear(const LinComb& u, const LinComb& v) {
  return bilinear<AdmissiblePair, OpenPair>(u, v, psi_action);
}

constexpr std::size_t kSamples = 2000;
constexpr int kExhaustiveTriples = 2;

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

AdmissiblePair random_pair_over(std::mt19937_64& rng, const Topology& base) {
  return AdmissiblePair(base, pick(rng, admissible_refinements(base)));
}

// Triples for the divtimes and Psi checks: every triple for small n, else a
// seeded sample in which three quarters of the draws are composable.
struct Triple {
  AdmissiblePair a;
  AdmissiblePair b;
  std::optional<AdmissiblePair> c;
  std::optional<OpenPair> y;
};

std::vector<Triple> triples(const LabelSet& x, bool with_open_pair) {
  const auto pairs = admissible_pairs_on(x);
  const auto opens = open_pairs_on(x);
  std::vector<Triple> out;
  if (x.size() <= kExhaustiveTriples) {
    for (const auto& a : pairs) {
      for (const auto& b : pairs) {
        if (with_open_pair) {
          for (const auto& y : opens) out.push_back({a, b, std::nullopt, y});
        } else {
          for (const auto& c : pairs) out.push_back({a, b, c, std::nullopt});
        }
      }
    }
    return out;
  }
  std::mt19937_64 rng(0x746f706fULL + static_cast<unsigned>(x.size()));
  std::uniform_int_distribution<int> coin(0, 3);
  for (std::size_t s = 0; s < kSamples; ++s) {
    const AdmissiblePair a = pick(rng, pairs);
    if (coin(rng) == 0) {
      Triple t{a, pick(rng, pairs), std::nullopt, std::nullopt};
      if (with_open_pair) {
        t.y = pick(rng, opens);
      } else {
        t.c = pick(rng, pairs);
      }
      out.push_back(std::move(t));
      continue;
    }
    const AdmissiblePair b = random_pair_over(rng, quotient(a.base(), a.refinement()));
    const Topology next = quotient(b.base(), b.refinement());
    Triple t{a, b, std::nullopt, std::nullopt};
    if (with_open_pair) {
      t.y = OpenPair(next, pick(rng, open_masks(next)));
    } else {
      t.c = random_pair_over(rng, next);
    }
    out.push_back(std::move(t));
  }
  return out;
}

Json triple_json(const Triple& t) {
  return t.c ? tuple_json({t.a, t.b, *t.c}) : tuple_json({t.a, t.b, *t.y});
}

Outcome divtimes_assoc(const LabelSet& x, int jobs) {
  const auto items = triples(x, false);
  return sweep(
      items.size(),
      [&](std::size_t i) {
        const Triple& t = items[i];
        const LinComb a(t.a), b(t.b), c(*t.c);
        return expect_equal(triple_json(t), divtimes_linear(divtimes_linear(a, b), c),
                            divtimes_linear(a, divtimes_linear(b, c)), "(a # b) # c != a # (b # c)");
      },
      [&](std::size_t i) { return triple_json(items[i]); }, jobs);
}

Outcome psi_action_check(const LabelSet& x, int jobs) {
  const auto items = triples(x, true);
  return sweep(
      items.size(),
      [&](std::size_t i) {
        const Triple& t = items[i];
        const LinComb a(t.a), b(t.b), y(*t.y);
        return expect_equal(triple_json(t), psi_linear(divtimes_linear(a, b), y), psi_linear(a, psi_linear(b, y)),
                            "Psi((a # b) (x) y) != Psi(a (x) Psi(b (x) y))");
      },
      [&](std::size_t i) { return triple_json(items[i]); }, jobs);
}

Outcome lemma21_bijection(const LabelSet& x, int jobs) {
  const auto items = admissible_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const Topology& t = items[i].base();
        const Topology& tpp = items[i].refinement();
        const Json in = key_to_json(items[i]);
        const Topology q = quotient(t, tpp);
        const auto targets = admissible_refinements(q);
        std::vector<Topology> images;
        for (const Topology& tp : admissible_refinements(t)) {
          if (!is_admissible(tpp, tp)) continue;
          const Topology image = quotient(tp, tpp);
          if (std::find(targets.begin(), targets.end(), image) == targets.end()) {
            return Failure{Json{{"input", in}, {"intermediate", topology_to_json(tp)}},
                           "T'/T'' is not admissible for T/T''"};
          }
          if (std::find(images.begin(), images.end(), image) != images.end()) {
            return Failure{Json{{"input", in}, {"intermediate", topology_to_json(tp)}},
                           "T' -> T'/T'' is not injective"};
          }
          images.push_back(image);
        }
        if (images.size() != targets.size()) {
          return Failure{Json{{"input", in}},
                         std::to_string(images.size()) + " intermediate topologies but " +
                             std::to_string(targets.size()) + " refinements of the quotient"};
        }
        for (const Topology& u : targets) {
          if (quotient(unquotient(t, tpp, u), tpp) != u) {
            return Failure{Json{{"input", in}, {"target", topology_to_json(u)}}, "unquotient does not invert"};
          }
        }
        return std::nullopt;
      },
      describe_key(items), jobs);
}

Outcome open_complement_lemma(const LabelSet& x, int jobs) {
  const auto items = admissible_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const Topology& t = items[i].base();
        const Topology& tt = items[i].refinement();
        const Topology q = quotient(t, tt);
        for (Mask y : open_masks(t)) {
          const bool lhs = q.is_open(y);
          const bool rhs = tt.is_open(y) && tt.is_open(t.full() & ~y);
          if (lhs != rhs) {
            return Failure{Json{{"input", key_to_json(items[i])}, {"open", x.select(y).ids()}},
                           lhs ? "open in T/T~ but not split by T~" : "split by T~ but not open in T/T~"};
          }
        }
        return std::nullopt;
      },
      describe_key(items), jobs);
}

Outcome tsplit_lemma(const LabelSet& x, int jobs) {
  const auto items = open_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) {
        const Topology& t = items[i].topology();
        const Mask z = items[i].open();
        const Topology u = disjoint_union(restrict_mask(t, z), restrict_mask(t, t.full() & ~z));
        return expect_true(key_to_json(items[i]), is_admissible(u, t), "T|_Z T|_{X\\Z} is not admissible for T");
      },
      describe_key(items), jobs);
}

Outcome cointeraction(const LabelSet& x, int jobs) {
  const auto items = open_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) {
        const OpenPair& p = items[i];
        const LinComb lhs = xi_linear(map_factor(phi_coaction(p), 1, delta_D_key, TensorKind::kInternalSpecies));
        const LinComb rhs = m13_linear(
            map_factors(delta_D(p), {phi_coaction_key, phi_coaction_key}, TensorKind::kSpeciesInternal));
        return expect_equal(key_to_json(p), lhs, rhs, "xi (id (x) Delta) Phi != m13 (Phi (x) Phi) Delta");
      },
      describe_key(items), jobs);
}

Outcome admissibility_transitive(const LabelSet& x, int jobs) {
  const auto items = admissible_pairs_on(x);
  return sweep(
      items.size(),
      [&](std::size_t i) -> std::optional<Failure> {
        const AdmissiblePair& p = items[i];
        for (const Topology& tpp : admissible_refinements(p.refinement())) {
          if (!is_admissible(tpp, p.base())) {
            return Failure{Json{{"input", key_to_json(p)}, {"second_refinement", topology_to_json(tpp)}},
                           "T'' admissible for T' admissible for T, but not for T"};
          }
        }
        return std::nullopt;
      },
      describe_key(items), jobs);
}

Outcome counit_gamma_T(const LabelSet& x, int jobs) {
  return counitality(tops(x), gamma_internal_key, counit_internal_key, jobs);
}

Outcome grading_additivity(const LabelSet& x, int jobs) {
  const auto ts = tops(x);
  const auto ops = open_pairs_on(x);
  const auto aps = admissible_pairs_on(x);
  const std::size_t n1 = ts.size(), n2 = n1 + ops.size(), n3 = n2 + aps.size();
  auto describe = [&](std::size_t i) {
    if (i < n1) return key_to_json(ts[i]);
    if (i < n2) return key_to_json(ops[i - n1]);
    return key_to_json(aps[i - n2]);
  };
  auto mismatch = [&](std::size_t i, const BasisKey& term, int lhs, int rhs) {
    return Failure{Json{{"input", describe(i)}, {"term", key_to_json(term)}},
                   "grading " + std::to_string(lhs) + " split as " + std::to_string(rhs)};
  };
  auto factors = [](const BasisKey& k) -> const std::vector<BasisKey>& { return k.as<Tensor>().factors; };
  return sweep(
      n3,
      [&](std::size_t i) -> std::optional<Failure> {
        if (i < n1) {
          const Topology& t = ts[i];
          const LinComb dt = delta_external(t);
          for (const auto& [k, c] : dt.terms()) {
            const int sum = factors(k)[0].as<Topology>().size() + factors(k)[1].as<Topology>().size();
            if (sum != t.size()) return mismatch(i, k, t.size(), sum);
          }
          const LinComb gt = gamma_internal(t);
          for (const auto& [k, c] : gt.terms()) {
            const int sum = grading_d(factors(k)[0].as<Topology>()) + grading_d(factors(k)[1].as<Topology>());
            if (sum != grading_d(t)) return mismatch(i, k, grading_d(t), sum);
          }
        } else if (i < n2) {
          const OpenPair& p = ops[i - n1];
          const LinComb dd = delta_D(p);
          for (const auto& [k, c] : dd.terms()) {
            const int sum = grading_D(factors(k)[0].as<OpenPair>()) + grading_D(factors(k)[1].as<OpenPair>());
            if (sum != grading_D(p)) return mismatch(i, k, grading_D(p), sum);
          }
        } else {
          const AdmissiblePair& p = aps[i - n2];
          const LinComb gd = gamma_Dtilde(p);
          for (const auto& [k, c] : gd.terms()) {
            const int sum = grading_Dtilde(factors(k)[0].as<AdmissiblePair>()) +
                            grading_Dtilde(factors(k)[1].as<AdmissiblePair>());
            if (sum != grading_Dtilde(p)) return mismatch(i, k, grading_Dtilde(p), sum);
          }
        }
        return std::nullopt;
      },
      describe, jobs);
}

// ---------------------------------------------------------------------------

using CheckFn = Outcome (*)(const LabelSet&, int);

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&e](std::string name, std::string statement, std::string origin, int def, int opt, Fault fault,
                    int mutation_n, CheckFn fn) {
      e.push_back({CheckInfo{std::move(name), std::move(statement), std::move(origin), def, opt, fault, mutation_n},
                   fn});
    };
    add("coassoc_delta_T", "(Delta (x) id) Delta = (id (x) Delta) Delta on topologies", "theorem", 4, 4,
        Fault::kDeltaSkipsFullOpenSet, 1, coassoc_delta_T);
    add("coassoc_gamma_T", "(Gamma (x) id) Gamma = (id (x) Gamma) Gamma on topologies", "theorem", 4, 4,
        Fault::kQuotientIgnoresRefinement, 2, coassoc_gamma_T);
    add("compat_T", "(id (x) Delta) Gamma = m13 (Gamma (x) Gamma) Delta", "proposition", 4, 4,
        Fault::kQuotientIgnoresRefinement, 2, compat_T);
    add("coassoc_delta_D", "Delta is coassociative on pairs (T, Y)", "theorem", 4, 4, Fault::kDeltaDSkipsEmptyZ, 1,
        coassoc_delta_D);
    add("noncounital_D", "1 (x) (T,Y) always appears in Delta(T,Y); (T,Y) (x) 1 only when Y = X", "remark", 4, 4,
        Fault::kDeltaDSwapsFactors, 1, noncounital_D);
    add("coassoc_gamma_Dt", "Gamma~ is coassociative on admissible pairs", "theorem", 4, 4,
        Fault::kSkipAdmissibilityCondition3, 2, coassoc_gamma_Dt);
    add("counit_gamma_Dt", "eps(T, T') = eps(T') is a counit for Gamma~", "theorem", 4, 4, Fault::kCounitPairUsesBase,
        2, counit_gamma_Dt);
    add("p2_morphism", "(T, T') -> T' is a bialgebra morphism", "proposition", 4, 4, Fault::kProjectionReturnsBase,
        2, p2_morphism);
    add("restriction_admissible", "T' admissible for T implies T'|_W admissible for T|_W", "proposition", 4, 4,
        Fault::kSkipAdmissibilityCondition2, 3, restriction_admissible);
    add("comodule_phi", "Phi is a coassociative, counital left coaction", "theorem", 3, 4,
        Fault::kPhiKeepsBaseTopology, 2, comodule_phi);
    add("phi_monoid", "Phi(ab) = Phi(a) Phi(b)", "proposition", 4, 4, Fault::kPhiOmitsFinestTerm, 2, phi_monoid);
    add("star_assoc", "the product * on pairs (T, Y) is associative", "theorem", 3, 3, Fault::kStarSubsetCondition,
        1, star_assoc);
    add("divtimes_assoc", "the product (T1,T1') # (T2,T2') is associative", "theorem", 4, 4,
        Fault::kDivtimesSkipsQuotientMatch, 2, divtimes_assoc);
    add("lemma21_bijection", "T' -> T'/T'' is a bijection onto refinements admissible for T/T''", "lemma", 4, 4,
        Fault::kQuotientIgnoresRefinement, 2, lemma21_bijection);
    add("psi_action", "Psi is an action of the # product", "proposition", 4, 4, Fault::kPsiSkipsQuotientMatch, 2,
        psi_action_check);
    add("open_complement_lemma", "for Y open in T: Y open in T/T~ iff Y and X\\Y are open in T~", "lemma", 4, 4,
        Fault::kQuotientIgnoresRefinement, 2, open_complement_lemma);
    add("tsplit_lemma", "T|_Z T|_{X\\Z} is admissible for T when Z is open", "lemma", 4, 4,
        Fault::kConditionThreeUsesClasses, 2, tsplit_lemma);
    add("cointeraction", "xi (id (x) Delta) Phi = m13 (Phi (x) Phi) Delta", "theorem", 3, 4, Fault::kXiIsIdentity, 2,
        cointeraction);
    add("admissibility_transitive", "T'' admissible for T' admissible for T implies T'' admissible for T",
        "design decision", 4, 4, Fault::kSkipAdmissibilityCondition2, 2, admissibility_transitive);
    add("counit_gamma_T", "eps(T) = [d(T) = 0] is a counit for Gamma", "design decision", 4, 4,
        Fault::kCounitIgnoresGrading, 2, counit_gamma_T);
    add("grading_additivity", "every coproduct term splits the grading additively", "theorem", 4, 4,
        Fault::kGradingCountsClasses, 1, grading_additivity);
    return e;
  }();
  return entries;
}

const Entry& find_entry(std::string_view name) {
  for (const Entry& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw Error(ErrorCode::kUnknownCheck, "unknown check '" + std::string(name) + "'");
}

}  // namespace

Json VerificationReport::to_json() const {
  return Json{{"name", name},
              {"ground_size", ground_size},
              {"basis_elements_checked", basis_elements_checked},
              {"passed", passed},
              {"counterexample", counterexample ? *counterexample : Json(nullptr)},
              {"detail", detail},
              {"elapsed_ms", elapsed_ms}};
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo* find_check(std::string_view name) {
  for (const Entry& e : registry()) {
    if (e.info.name == name) return &e.info;
  }
  return nullptr;
}

VerificationReport run_check(std::string_view name, int n, const VerifyOptions& opts) {
  const Entry& e = find_entry(name);
  const int limit = opts.expensive ? e.info.opt_in_max_n : e.info.default_max_n;
  if (n < 0) throw Error(ErrorCode::kMalformedInput, "ground size must be non-negative");
  if (n > limit || n > enumeration_limit()) {
    std::string msg = e.info.name + " runs up to n = " + std::to_string(std::min(limit, enumeration_limit()));
    if (!opts.expensive && e.info.opt_in_max_n > e.info.default_max_n) {
      msg += " (n = " + std::to_string(e.info.opt_in_max_n) + " with --expensive)";
    }
    throw Error(ErrorCode::kGroundSetTooLarge, msg);
  }
  VerificationReport report;
  report.name = e.info.name;
  report.ground_size = n;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = e.fn(LabelSet::first_n(n), opts.jobs);
  } catch (const std::exception& ex) {
    // Raised while building the inputs rather than inside a probe.
    out.failure = Failure{Json{{"input", nullptr}}, ex.what()};
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.basis_elements_checked = out.checked;
  report.passed = !out.failure.has_value();
  if (out.failure) {
    report.counterexample = std::move(out.failure->counterexample);
    report.detail = std::move(out.failure->detail);
  }
  return report;
}

std::vector<VerificationReport> run_all(int n_max, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (const Entry& e : registry()) {
    const int limit = std::min({n_max, opts.expensive ? e.info.opt_in_max_n : e.info.default_max_n,
                                enumeration_limit()});
    for (int n = 0; n <= limit; ++n) out.push_back(run_check(e.info.name, n, opts));
  }
  return out;
}

VerificationReport run_mutation(const CheckInfo& check) {
  ScopedFault guard(check.designated_fault);
  return run_check(check.name, check.mutation_n);
}

}  // namespace topobim
