#include "sectio/errors.hpp"

namespace sectio {

const char* error_code_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::SingularBranch: return "SingularBranch";
    case ErrorCode::BadAxisCount: return "BadAxisCount";
    case ErrorCode::SupportEscape: return "SupportEscape";
    case ErrorCode::StateBudgetExceeded: return "StateBudgetExceeded";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

}  // namespace sectio
