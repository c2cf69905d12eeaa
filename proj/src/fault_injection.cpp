#include "topobim/fault_injection.hpp"

#include <atomic>

namespace topobim {
namespace {

std::atomic<Fault> g_fault{Fault::kNone};

}  // namespace

Fault active_fault() noexcept { return g_fault.load(std::memory_order_relaxed); }

std::string_view fault_name(Fault fault) {
  switch (fault) {
    case Fault::kNone: return "none";
    case Fault::kDeltaSkipsFullOpenSet: return "delta_skips_full_open_set";
    case Fault::kDeltaDSkipsEmptyZ: return "delta_D_skips_empty_Z";
    case Fault::kDeltaDSwapsFactors: return "delta_D_swaps_factors";
    case Fault::kQuotientIgnoresRefinement: return "quotient_ignores_refinement";
    case Fault::kSkipAdmissibilityCondition2: return "skip_admissibility_condition_2";
    case Fault::kSkipAdmissibilityCondition3: return "skip_admissibility_condition_3";
    case Fault::kConditionThreeUsesClasses: return "condition_three_uses_classes";
    case Fault::kCounitIgnoresGrading: return "counit_ignores_grading";
    case Fault::kCounitPairUsesBase: return "counit_pair_uses_base";
    case Fault::kProjectionReturnsBase: return "projection_returns_base";
    case Fault::kPhiOmitsFinestTerm: return "phi_omits_finest_term";
    case Fault::kPhiKeepsBaseTopology: return "phi_keeps_base_topology";
    case Fault::kXiIsIdentity: return "xi_is_identity";
    case Fault::kStarSubsetCondition: return "star_subset_condition";
    case Fault::kDivtimesSkipsQuotientMatch: return "divtimes_skips_quotient_match";
    case Fault::kPsiSkipsQuotientMatch: return "psi_skips_quotient_match";
    case Fault::kGradingCountsClasses: return "grading_counts_classes";
  }
  return "unknown";
}

const std::vector<Fault>& all_faults() {
  static const std::vector<Fault> faults = {
      Fault::kDeltaSkipsFullOpenSet,     Fault::kDeltaDSkipsEmptyZ,
      Fault::kDeltaDSwapsFactors,        Fault::kQuotientIgnoresRefinement,
      Fault::kSkipAdmissibilityCondition2, Fault::kSkipAdmissibilityCondition3, Fault::kConditionThreeUsesClasses,
      Fault::kCounitIgnoresGrading,      Fault::kCounitPairUsesBase,
      Fault::kProjectionReturnsBase,     Fault::kPhiOmitsFinestTerm,
      Fault::kPhiKeepsBaseTopology,      Fault::kXiIsIdentity,
      Fault::kStarSubsetCondition,       Fault::kDivtimesSkipsQuotientMatch,
      Fault::kPsiSkipsQuotientMatch,     Fault::kGradingCountsClasses,
  };
  return faults;
}

ScopedFault::ScopedFault(Fault fault) : previous_(g_fault.exchange(fault)) {}

ScopedFault::~ScopedFault() { g_fault.store(previous_); }

}  // namespace topobim
