#include "topobim/error.hpp"

namespace topobim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kNotReflexive: return "NotReflexive";
    case ErrorCode::kNotTransitive: return "NotTransitive";
    case ErrorCode::kLabelNotInGroundSet: return "LabelNotInGroundSet";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kNotFiner: return "NotFiner";
    case ErrorCode::kNotOpen: return "NotOpen";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kLemmaViolation: return "LemmaViolation";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kLabelOverlapInSpeciesTensor: return "LabelOverlapInSpeciesTensor";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kUnknownCheck: return "UnknownCheck";
    case ErrorCode::kUnknownMap: return "UnknownMap";
  }
  return "Unknown";
}

}  // namespace topobim
