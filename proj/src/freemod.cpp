#include "topobim/freemod.hpp"

#include <algorithm>

#include "topobim/error.hpp"

namespace topobim {
namespace {

template <class T>
int three_way(const T& a, const T& b) {
  const auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::vector<BasisKey> factors_of(const BasisKey& key) {
  if (key.holds<Tensor>()) return key.as<Tensor>().factors;
  return {key};
}

BasisKey assemble(TensorKind kind, std::vector<BasisKey> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  return make_tensor(kind, std::move(factors));
}

LabelSet union_of(const std::vector<BasisKey>& keys, std::size_t first, std::size_t step) {
  LabelSet out;
  for (std::size_t i = first; i < keys.size(); i += step) {
    const LabelSet g = ground_of(keys[i]);
    if (!out.is_disjoint_from(g)) {
      throw Error(ErrorCode::kLabelOverlapInSpeciesTensor,
                  "species tensor factors share labels: " + out.to_string() + " and " + g.to_string());
    }
    out = out.union_with(g);
  }
  return out;
}

}  // namespace

std::string_view tensor_kind_name(TensorKind kind) {
  switch (kind) {
    case TensorKind::kSpecies: return "species";
    case TensorKind::kInternal: return "internal";
    case TensorKind::kInternalSpecies: return "internal_species";
    case TensorKind::kSpeciesInternal: return "species_internal";
  }
  return "species";
}

TensorKind tensor_kind_from_name(std::string_view name) {
  for (TensorKind k : {TensorKind::kSpecies, TensorKind::kInternal, TensorKind::kInternalSpecies,
                       TensorKind::kSpeciesInternal}) {
    if (tensor_kind_name(k) == name) return k;
  }
  throw Error(ErrorCode::kMalformedInput, "unknown tensor kind '" + std::string(name) + "'");
}

int compare(const BasisKey& a, const BasisKey& b) {
  if (a.value.index() != b.value.index()) return a.value.index() < b.value.index() ? -1 : 1;
  if (a.holds<Topology>()) return three_way(a.as<Topology>(), b.as<Topology>());
  if (a.holds<OpenPair>()) return three_way(a.as<OpenPair>(), b.as<OpenPair>());
  if (a.holds<AdmissiblePair>()) return three_way(a.as<AdmissiblePair>(), b.as<AdmissiblePair>());
  const Tensor& x = a.as<Tensor>();
  const Tensor& y = b.as<Tensor>();
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  const std::size_t n = std::min(x.factors.size(), y.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(x.factors[i], y.factors[i]); c != 0) return c;
  }
  return three_way(x.factors.size(), y.factors.size());
}

LabelSet ground_of(const BasisKey& key) {
  if (key.holds<Topology>()) return key.as<Topology>().labels();
  if (key.holds<OpenPair>()) return key.as<OpenPair>().ground();
  if (key.holds<AdmissiblePair>()) return key.as<AdmissiblePair>().ground();
  LabelSet out;
  for (const BasisKey& f : key.as<Tensor>().factors) out = out.union_with(ground_of(f));
  return out;
}

void validate_tensor(const Tensor& t) {
  const auto& f = t.factors;
  switch (t.kind) {
    case TensorKind::kSpecies:
      union_of(f, 0, 1);
      return;
    case TensorKind::kInternal:
      for (const BasisKey& k : f) {
        if (ground_of(k) != ground_of(f.front())) {
          throw Error(ErrorCode::kGroundSetMismatch, "internal tensor factors live on different label sets");
        }
      }
      return;
    case TensorKind::kInternalSpecies: {
      if (f.empty()) return;
      const LabelSet rest = union_of(f, 1, 1);
      if (rest != ground_of(f.front())) {
        throw Error(ErrorCode::kGroundSetMismatch,
                    "trailing factors cover " + rest.to_string() + " instead of " +
                        ground_of(f.front()).to_string());
      }
      return;
    }
    case TensorKind::kSpeciesInternal:
      if (f.size() % 2 != 0) {
        throw Error(ErrorCode::kMalformedInput, "species_internal tensors need an even number of factors");
      }
      for (std::size_t i = 0; i < f.size(); i += 2) {
        if (ground_of(f[i]) != ground_of(f[i + 1])) {
          throw Error(ErrorCode::kGroundSetMismatch, "paired factors live on different label sets");
        }
      }
      union_of(f, 0, 2);
      return;
  }
}

BasisKey make_tensor(TensorKind kind, std::vector<BasisKey> factors) {
  Tensor t{kind, std::move(factors)};
  validate_tensor(t);
  return BasisKey(std::move(t));
}

LinComb::LinComb(BasisKey key, Rational coeff) { add_term(key, coeff); }

void LinComb::add_term(const BasisKey& key, const Rational& raw) {
  // GMP arithmetic assumes canonical operands; callers may pass e.g. 2/4.
  Rational coeff = raw;
  coeff.canonicalize();
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational LinComb::coeff(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& raw) {
  Rational scale = raw;
  scale.canonicalize();
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scale;
  return *this;
}

bool operator==(const LinComb& a, const LinComb& b) {
  return a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

LinComb add(const LinComb& a, const LinComb& b) { return a + b; }

LinComb tensor(const LinComb& a, const LinComb& b, TensorKind kind) {
  auto spliced = [kind](const BasisKey& key) {
    if (!key.holds<Tensor>()) return std::vector<BasisKey>{key};
    if (key.as<Tensor>().kind != kind) {
      throw Error(ErrorCode::kKindMismatch, "cannot splice a " +
                                                std::string(tensor_kind_name(key.as<Tensor>().kind)) +
                                                " tensor into a " + std::string(tensor_kind_name(kind)) +
                                                " tensor");
    }
    return key.as<Tensor>().factors;
  };
  LinComb out;
  for (const auto& [ka, ca] : a.terms()) {
    const auto left = spliced(ka);
    for (const auto& [kb, cb] : b.terms()) {
      auto factors = left;
      const auto right = spliced(kb);
      factors.insert(factors.end(), right.begin(), right.end());
      out.add_term(make_tensor(kind, std::move(factors)), ca * cb);
    }
  }
  return out;
}

LinComb tensor(const std::vector<LinComb>& factors, TensorKind kind) {
  if (factors.empty()) return {};
  LinComb acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i], kind);
  return acc;
}

LinComb extend_linear(const BasisMap& f, const LinComb& v) {
  LinComb out;
  for (const auto& [k, c] : v.terms()) {
    LinComb image = f(k);
    image *= c;
    out += image;
  }
  return out;
}

LinComb map_factor(const LinComb& v, std::size_t index, const BasisMap& f, TensorKind out) {
  LinComb result;
  for (const auto& [key, c] : v.terms()) {
    const auto factors = factors_of(key);
    if (index >= factors.size()) {
      throw Error(ErrorCode::kMalformedInput, "tensor has no factor " + std::to_string(index));
    }
    const LinComb images = f(factors[index]);
    for (const auto& [image, d] : images.terms()) {
      std::vector<BasisKey> next(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(index));
      const auto inner = factors_of(image);
      next.insert(next.end(), inner.begin(), inner.end());
      next.insert(next.end(), factors.begin() + static_cast<std::ptrdiff_t>(index) + 1, factors.end());
      result.add_term(assemble(out, std::move(next)), c * d);
    }
  }
  return result;
}

LinComb map_factors(const LinComb& v, const std::vector<BasisMap>& fs, TensorKind out) {
  LinComb result;
  for (const auto& [key, c] : v.terms()) {
    const auto factors = factors_of(key);
    if (factors.size() != fs.size()) {
      throw Error(ErrorCode::kMalformedInput, "expected " + std::to_string(fs.size()) + " factors, got " +
                                                  std::to_string(factors.size()));
    }
    std::vector<std::pair<std::vector<BasisKey>, Rational>> partial{{{}, c}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const LinComb image = fs[i](factors[i]);
      std::vector<std::pair<std::vector<BasisKey>, Rational>> next;
      for (const auto& [prefix, pc] : partial) {
        for (const auto& [k, d] : image.terms()) {
          auto extended = prefix;
          const auto inner = factors_of(k);
          extended.insert(extended.end(), inner.begin(), inner.end());
          next.emplace_back(std::move(extended), pc * d);
        }
      }
      partial = std::move(next);
    }
    for (auto& [factor_list, pc] : partial) result.add_term(assemble(out, std::move(factor_list)), pc);
  }
  return result;
}

LinComb contract_factor(const LinComb& v, std::size_t index, const BasisFunctional& f) {
  LinComb result;
  for (const auto& [key, c] : v.terms()) {
    if (!key.holds<Tensor>()) {
      throw Error(ErrorCode::kMalformedInput, "contraction needs a tensor key");
    }
    const Tensor& t = key.as<Tensor>();
    if (index >= t.factors.size()) {
      throw Error(ErrorCode::kMalformedInput, "tensor has no factor " + std::to_string(index));
    }
    const Rational scale = f(t.factors[index]);
    if (scale == 0) continue;
    std::vector<BasisKey> rest = t.factors;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
    result.add_term(assemble(t.kind, std::move(rest)), c * scale);
  }
  return result;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::kMalformedInput, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace topobim
