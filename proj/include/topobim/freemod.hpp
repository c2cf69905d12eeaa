#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topobim/pairs.hpp"
#include "topobim/topology.hpp"

namespace topobim {

using Rational = mpq_class;

/// Which tensor space a flat factor list lives in.
///   kSpecies          factors on pairwise disjoint label sets
///   kInternal         every factor on the same label set
///   kInternalSpecies  factor 0 on X, the remaining factors partition X
///   kSpeciesInternal  factors (0,1), (2,3), ... share a label set; the pairs
///                     are pairwise disjoint
enum class TensorKind { kSpecies, kInternal, kInternalSpecies, kSpeciesInternal };

std::string_view tensor_kind_name(TensorKind kind);
/// Throws kMalformedInput.
TensorKind tensor_kind_from_name(std::string_view name);

struct BasisKey;

/// Flat, never nested.
struct Tensor {
  TensorKind kind = TensorKind::kSpecies;
  std::vector<BasisKey> factors;
};

struct BasisKey {
  std::variant<Topology, OpenPair, AdmissiblePair, Tensor> value;

  BasisKey(Topology t) : value(std::move(t)) {}
  BasisKey(OpenPair p) : value(std::move(p)) {}
  BasisKey(AdmissiblePair p) : value(std::move(p)) {}
  BasisKey(Tensor t) : value(std::move(t)) {}

  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(value);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
};

int compare(const BasisKey& a, const BasisKey& b);
inline bool operator<(const BasisKey& a, const BasisKey& b) { return compare(a, b) < 0; }
inline bool operator==(const BasisKey& a, const BasisKey& b) { return compare(a, b) == 0; }

/// Label set a key lives on; for tensors, the union over factors.
LabelSet ground_of(const BasisKey& key);

/// Builds a tensor key after checking the kind's label constraints.
/// Throws kLabelOverlapInSpeciesTensor or kGroundSetMismatch.
BasisKey make_tensor(TensorKind kind, std::vector<BasisKey> factors);
void validate_tensor(const Tensor& t);

/// Finitely supported map from basis keys to exact rationals, zeros pruned.
class LinComb {
 public:
  using Terms = std::map<BasisKey, Rational>;

  LinComb() = default;
  explicit LinComb(BasisKey key, Rational coeff = 1);

  void add_term(const BasisKey& key, const Rational& coeff);
  const Terms& terms() const& { return terms_; }
  // Safe in a range-for over a temporary.
  Terms terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const BasisKey& key) const;

  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Rational& scale);

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb v) { return v *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b);

 private:
  Terms terms_;
};

LinComb add(const LinComb& a, const LinComb& b);

/// Bilinear tensor product. A factor that is already a tensor of the same
/// kind is spliced in; a tensor of another kind throws kKindMismatch.
LinComb tensor(const LinComb& a, const LinComb& b, TensorKind kind);
LinComb tensor(const std::vector<LinComb>& factors, TensorKind kind);

using BasisMap = std::function<LinComb(const BasisKey&)>;
using BasisFunctional = std::function<Rational(const BasisKey&)>;

LinComb extend_linear(const BasisMap& f, const LinComb& v);

/// id (x) ... (x) f (x) ... (x) id on tensor keys: factor `index` is replaced
/// by the image of f, whose tensor factors are spliced in place. The result
/// is re-validated as a tensor of kind `out`.
LinComb map_factor(const LinComb& v, std::size_t index, const BasisMap& f, TensorKind out);

/// f_0 (x) f_1 (x) ...; one map per factor.
LinComb map_factors(const LinComb& v, const std::vector<BasisMap>& fs, TensorKind out);

/// Applies a scalar functional to factor `index` and drops that factor.
/// A single remaining factor is returned as a bare key.
LinComb contract_factor(const LinComb& v, std::size_t index, const BasisFunctional& f);

/// "p/q", denominators always written.
std::string rational_to_string(const Rational& q);
/// Accepts "p/q" or "p". Throws kMalformedInput.
Rational rational_from_string(const std::string& s);

}  // namespace topobim
