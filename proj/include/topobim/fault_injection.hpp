#pragma once

#include <string_view>
#include <vector>

namespace topobim {

// Deliberate defects that the verifier's soundness harness switches on to
// prove that every registered check can actually fail. Production code never
// sets a fault; the default is kNone.
enum class Fault {
  kNone,
  kDeltaSkipsFullOpenSet,       // external coproduct on T omits Y = X
  kDeltaDSkipsEmptyZ,           // coproduct on D omits Z = empty
  kDeltaDSwapsFactors,          // coproduct on D emits (X\Z part) (x) (Z part)
  kQuotientIgnoresRefinement,   // T/T' returns T
  kSkipAdmissibilityCondition2, // no agreement check on T'-components
  kSkipAdmissibilityCondition3, // no class/component comparison
  kConditionThreeUsesClasses,   // compares with the classes of T', not its components
  kCounitIgnoresGrading,        // eps(T) = 1 for every T
  kCounitPairUsesBase,          // eps(T, T') = eps(T)
  kProjectionReturnsBase,       // P2(T, T') = T
  kPhiOmitsFinestTerm,          // coaction drops T' = D_{X,T}
  kPhiKeepsBaseTopology,        // coaction emits (T, Y) instead of (T/T', Y)
  kXiIsIdentity,                // xi leaves the first factor untouched
  kStarSubsetCondition,         // star accepts X2 strictly inside X1\Y1
  kDivtimesSkipsQuotientMatch,  // divtimes ignores T2 = T1/T1'
  kPsiSkipsQuotientMatch,       // Psi ignores U = T/T'
  kGradingCountsClasses,        // d(T) = number of classes
};

Fault active_fault() noexcept;

std::string_view fault_name(Fault fault);
const std::vector<Fault>& all_faults();

/// Installs a fault for the lifetime of the guard. Memo caches key on the
/// active fault, so no flushing is needed. Intended for single-threaded
/// test harnesses.
class ScopedFault {
 public:
  explicit ScopedFault(Fault fault);
  ~ScopedFault();
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};

inline bool fault_is(Fault f) noexcept { return active_fault() == f; }

}  // namespace topobim
