#include "vseval/errors.hpp"

namespace vseval {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ManifestNotFound: return "manifest-not-found";
    case ErrorCode::SchemaViolation: return "schema-violation";
    case ErrorCode::EmptySummaryDirectory: return "empty-summary-directory";
    case ErrorCode::DuplicateFrameId: return "duplicate-frame-id";
    case ErrorCode::UnsupportedFormat: return "unsupported-format";
    case ErrorCode::CorruptImage: return "corrupt-image";
    case ErrorCode::EmptyImage: return "empty-image";
    case ErrorCode::WrongDimensions: return "wrong-dimensions";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::NonNormalizedInput: return "non-normalized-input";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::EmptySummary: return "empty-summary";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::ZeroDenominator: return "zero-denominator";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::IoFailure: return "io-failure";
  }
  return "unknown-error";
}

}  // namespace vseval
