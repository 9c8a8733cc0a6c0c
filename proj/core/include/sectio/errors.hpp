#pragma once

#include <stdexcept>
#include <string>

namespace sectio {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  FieldMismatch,
  VariableCountMismatch,
  ZeroPolynomial,
  ZeroSeries,
  NotARoot,
  SingularBranch,
  BadAxisCount,
  SupportEscape,
  StateBudgetExceeded,
  NotFound,
  InsufficientPrecision,
  MalformedInput,
};

const char* error_code_name(ErrorCode c) noexcept;

/// Library-wide exception; `code()` is stable and machine-readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace sectio
