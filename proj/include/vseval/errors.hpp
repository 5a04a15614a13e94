#pragma once

#include <stdexcept>
#include <string>

namespace vseval {

enum class ErrorCode {
  ManifestNotFound,
  SchemaViolation,
  EmptySummaryDirectory,
  DuplicateFrameId,
  UnsupportedFormat,
  CorruptImage,
  EmptyImage,
  WrongDimensions,
  LengthMismatch,
  NonNormalizedInput,
  OutOfRange,
  EmptySummary,
  EmptyInput,
  ZeroDenominator,
  InvalidConfig,
  IoFailure,
};

const char* error_code_name(ErrorCode code);

class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vseval
