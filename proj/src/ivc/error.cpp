#include "ivc/error.hpp"

namespace ivc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InvalidVertex: return "invalid-vertex";
    case ErrorCode::NoFiniteDiameter: return "no-finite-diameter";
    case ErrorCode::NotRegular: return "not-regular";
    case ErrorCode::CannotStepDown: return "cannot-step-down";
    case ErrorCode::InvalidColoring: return "invalid-coloring";
    case ErrorCode::HypothesisViolated: return "hypothesis-violated";
    case ErrorCode::RangeError: return "range-error";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::SchemaError: return "schema-error";
    case ErrorCode::UsageError: return "usage-error";
    case ErrorCode::ConstructionFailed: return "construction-failed";
  }
  return "unknown";
}

}  // namespace ivc
