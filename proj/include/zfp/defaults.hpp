#pragma once

// Frozen defaults shared by the library and the CLI. Bump kDefaultsVersion
// whenever any value below changes.

#include <cstdint>

namespace zfp::defaults {

inline constexpr int kDefaultsVersion = 1;

inline constexpr int kPrecisionBits = 160;

// zero_sum reduction
inline constexpr std::size_t kSumChunkSize = std::size_t{1} << 16;

// landau
inline constexpr double kDegenerateLogRatio = 0x1p-40;

// relations
inline constexpr int kDetectMaxNorm = 20;
inline constexpr std::uint64_t kDetectMaxPrime = 20;
inline constexpr std::int64_t kDetectMaxQ = 8;
inline constexpr std::int64_t kDetectMaxA = 4;
inline constexpr double kDetectTolerance = 1e-30;
inline constexpr double kConsistencyTolerance = 1e-20;

// density
inline constexpr int kSeriesTerms = 1000;
inline constexpr double kSeriesCutoff = 0x1p-70;

// diophantine
inline constexpr int kCfMaxTerms = 60;
inline constexpr int kCfGuardBits = 16;
inline constexpr double kExpOverflowExponent = 700.0;
inline constexpr double kConditionC = 1e-6;
inline constexpr int kConditionJ = 15;
inline constexpr double kBakerMu = 4.0;
inline constexpr double kEpsilon = 0.1;
inline constexpr double kDecayB = 5.0;
inline constexpr int kClassifyJ = 30;

// empirical
inline constexpr int kDmResolution = 100;
inline constexpr double kTailNoiseAllowance = 1.2;

}  // namespace zfp::defaults
