#include "zfp/error.hpp"

namespace zfp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kNonMonotone: return "non-monotone";
    case ErrorCode::kBadMagic: return "bad-magic";
    case ErrorCode::kVersionMismatch: return "version-mismatch";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kZeroRow: return "zero-row";
    case ErrorCode::kRowGcd: return "row-gcd";
    case ErrorCode::kNonPositiveExponent: return "non-positive-exponent";
    case ErrorCode::kBadDenominator: return "bad-denominator";
    case ErrorCode::kNotPrime: return "not-prime";
    case ErrorCode::kRepeatedPrime: return "repeated-prime";
    case ErrorCode::kRankDeficient: return "rank-deficient";
    case ErrorCode::kUnderdetermined: return "underdetermined";
    case ErrorCode::kAmbiguousRelation: return "ambiguous-relation";
    case ErrorCode::kInconsistentAlpha: return "inconsistent-alpha";
    case ErrorCode::kAmbiguousFrequency: return "ambiguous-frequency";
    case ErrorCode::kInvalidTestFunction: return "invalid-test-function";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

}  // namespace zfp
