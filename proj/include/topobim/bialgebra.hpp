#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "topobim/freemod.hpp"

namespace topobim {

// Topologies.

/// Sum over open Y of T|_{X\Y} (x) T|_Y, species kind.
LinComb delta_external(const Topology& t);
/// Sum over admissible T' of T' (x) T/T', internal kind.
LinComb gamma_internal(const Topology& t);
/// 1 when grading_d(t) == 0.
Rational counit_internal(const Topology& t);

// Products. Disjoint labels required (kLabelCollision); the empty topology
// is the unit in each space.
Topology multiply(const Topology& a, const Topology& b);
OpenPair multiply(const OpenPair& a, const OpenPair& b);
AdmissiblePair multiply(const AdmissiblePair& a, const AdmissiblePair& b);
/// Dispatches on the key type; tensors of the same kind and length multiply
/// factor by factor. Mixed types throw kKindMismatch.
BasisKey m_product(const BasisKey& a, const BasisKey& b);

// Doubling by open sets.

/// Sum over Z open in T|_Y of (T|_Z, Z) (x) (T|_{X\Z}, Y\Z), species kind.
LinComb delta_D(const OpenPair& p);
int grading_D(const OpenPair& p);

// Doubling by admissible refinements.

/// Sum over T'' admissible for T' of (T, T'') (x) (T/T'', T'/T''), internal
/// kind. Both factors are re-validated; a failure throws kNotAdmissible.
LinComb gamma_Dtilde(const AdmissiblePair& p);
Rational counit_Dtilde(const AdmissiblePair& p);
int grading_Dtilde(const AdmissiblePair& p);
Topology p2_projection(const AdmissiblePair& p);

/// Sum over admissible T' with T'|_{X\Y} an equivalence relation and Y open
/// in T/T' of (T, T') (x) (T/T', Y). Openness in the quotient is decided by
/// "Y and X\Y are both open in T'".
LinComb phi_coaction(const OpenPair& p);

/// (T1, Y1 u Y2) when labels(T2) = X1\Y1 and T2 = T1|_{X2}, else zero.
LinComb star_product(const OpenPair& a, const OpenPair& b);

/// The unique U with t1p admissible for U, U admissible for t1 and
/// U/t1p = t2p, found by search. Throws kNotAdmissible on bad inputs and
/// kLemmaViolation if the search finds zero or several solutions.
Topology unquotient(const Topology& t1, const Topology& t1p, const Topology& t2p);

/// (T1, unquotient(T1, T1', T2')) when T2 = T1/T1', else zero.
LinComb divtimes_product(const AdmissiblePair& a, const AdmissiblePair& b);

/// (T, Y) when U = T/T', else zero.
LinComb psi_action(const AdmissiblePair& a, const OpenPair& b);

/// Replaces (T, T~) by (T|_Z T|_{X\Z}, T~|_Z T~|_{X\Z}) where Z is the open
/// set of the first open pair. The two open pairs must partition X
/// (kPartitionMismatch otherwise).
LinComb xi_map(const AdmissiblePair& a, const OpenPair& first, const OpenPair& second);

/// t1 t3 (x) t2 (x) t4, internal_species kind.
LinComb m13(const BasisKey& t1, const BasisKey& t2, const BasisKey& t3, const BasisKey& t4);

// Tensor-level versions used by the verifier.

/// On internal_species keys with three factors.
LinComb xi_linear(const LinComb& v);
/// On species_internal keys with four factors.
LinComb m13_linear(const LinComb& v);

/// Basis-level structure maps wrapped for extend_linear.
LinComb delta_external_key(const BasisKey& k);
LinComb gamma_internal_key(const BasisKey& k);
LinComb delta_D_key(const BasisKey& k);
LinComb gamma_Dtilde_key(const BasisKey& k);
LinComb phi_coaction_key(const BasisKey& k);
LinComb p2_projection_key(const BasisKey& k);
Rational counit_internal_key(const BasisKey& k);
Rational counit_Dtilde_key(const BasisKey& k);

// Reflection for the command line.

enum class MapName {
  kDeltaExternal,
  kGammaInternal,
  kCounitInternal,
  kMProduct,
  kDeltaD,
  kGammaDtilde,
  kCounitDtilde,
  kP2Projection,
  kPhiCoaction,
  kStarProduct,
  kUnquotient,
  kDivtimesProduct,
  kPsiAction,
  kXiMap,
  kM13,
  kQuotient,
  kFinestAdmissible,
};

const std::vector<MapName>& all_map_names();
std::string_view map_name(MapName m);
std::optional<MapName> map_from_name(std::string_view name);

/// Applies a map to basis arguments. Scalar results come back as a multiple
/// of the empty topology. xi_map and m13 also take their tensor as a single
/// argument. Throws kMalformedInput on arity or argument type errors.
LinComb apply_map(MapName m, const std::vector<BasisKey>& args);
/// Linear extension; a tensor key supplies its factors as the arguments of
/// a map taking several.
LinComb apply_map_linear(MapName m, const LinComb& v);

}  // namespace topobim
