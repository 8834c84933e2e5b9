#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zfp {

// Stable codes; the CLI uses the numeric value as its exit status.
enum class ErrorCode : int {
  kParse = 10,
  kNonMonotone = 11,
  kBadMagic = 20,
  kVersionMismatch = 21,
  kTruncated = 22,
  kIo = 23,
  kDomain = 30,
  kInsufficientData = 31,
  kDimension = 32,
  kInvalidArgument = 33,
  kZeroRow = 40,
  kRowGcd = 41,
  kNonPositiveExponent = 42,
  kBadDenominator = 43,
  kNotPrime = 44,
  kRepeatedPrime = 45,
  kRankDeficient = 46,
  kUnderdetermined = 47,
  kAmbiguousRelation = 48,
  kInconsistentAlpha = 49,
  kAmbiguousFrequency = 50,
  kInvalidTestFunction = 51,
  kConfig = 60,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zfp
