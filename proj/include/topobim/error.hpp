#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topobim {

enum class ErrorCode {
  kMalformedInput,
  kNotReflexive,
  kNotTransitive,
  kLabelNotInGroundSet,
  kLabelCollision,
  kGroundSetMismatch,
  kGroundSetTooLarge,
  kNotFiner,
  kNotOpen,
  kNotAdmissible,
  kLemmaViolation,
  kPartitionMismatch,
  kLabelOverlapInSpeciesTensor,
  kKindMismatch,
  kUnknownCheck,
  kUnknownMap,
};

/// Stable identifier used in structured CLI errors, e.g. "NotOpen".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace topobim
