#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topobim/fault_injection.hpp"
#include "topobim/json_io.hpp"

namespace topobim {

struct CheckInfo {
  std::string name;
  std::string statement;
  /// theorem, proposition, lemma, remark or design decision.
  std::string origin;
  /// Largest n run by default, and with the expensive opt-in.
  int default_max_n = 4;
  int opt_in_max_n = 4;
  /// A fault under which the check must fail, and the size that exposes it.
  Fault designated_fault = Fault::kNone;
  int mutation_n = 2;
};

struct VerifyOptions {
  int jobs = 1;
  /// Lifts default_max_n to opt_in_max_n.
  bool expensive = false;
};

struct VerificationReport {
  std::string name;
  int ground_size = 0;
  std::uint64_t basis_elements_checked = 0;
  bool passed = true;
  /// Present exactly when passed is false.
  std::optional<Json> counterexample;
  std::string detail;
  double elapsed_ms = 0;

  Json to_json() const;
};

const std::vector<CheckInfo>& registered_checks();
/// nullptr when the name is not registered.
const CheckInfo* find_check(std::string_view name);

/// Every basis element (or valid tuple) on the ground set {0..n-1}.
/// Throws kUnknownCheck, or kGroundSetTooLarge above the check's limit.
VerificationReport run_check(std::string_view name, int n, const VerifyOptions& opts = {});

/// Each check at every n from 0 up to min(n_max, its limit), in registry order.
std::vector<VerificationReport> run_all(int n_max, const VerifyOptions& opts = {});

/// Runs the check at its mutation size with its designated fault installed.
VerificationReport run_mutation(const CheckInfo& check);

}  // namespace topobim
