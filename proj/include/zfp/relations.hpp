#pragma once

// Rational-relation systems M alpha = P with P_j = (a_j / q_j) log(p_j) / (2 pi),
// the data that determines the limiting density g_alpha.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfp/bigfloat.hpp"
#include "zfp/defaults.hpp"

namespace zfp {

struct RelationRow {
  std::vector<std::int64_t> b;  // primitive integer row of M
  std::int64_t a = 1;           // exponent numerator, >= 1
  std::int64_t q = 1;           // denominator, >= 1, gcd(a, q) = 1
  std::uint64_t p = 2;          // prime

  friend bool operator==(const RelationRow&, const RelationRow&) = default;
};

struct RelationSystem {
  std::size_t n = 0;
  std::vector<RelationRow> rows;  // r = rows.size(); r = 0 means g = 0

  std::size_t rank() const { return rows.size(); }
  friend bool operator==(const RelationSystem&, const RelationSystem&) = default;
};

// Checks every invariant and returns the system unchanged. Errors, in check order:
// kDimension, kZeroRow, kRankDeficient, kRowGcd, kNonPositiveExponent,
// kBadDenominator, kNotPrime, kRepeatedPrime.
RelationSystem validate(const RelationSystem& system);

bool equal_up_to_row_order(const RelationSystem& a, const RelationSystem& b);

// Rank over Q by fraction-free elimination.
std::size_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows);

// alpha_i = sum over terms of coefficient * log(p) / (2 pi).
struct AlphaTerm {
  mpq_class coefficient;
  std::uint64_t p = 2;

  friend bool operator==(const AlphaTerm&, const AlphaTerm&) = default;
};
using ExactAlpha = std::vector<std::vector<AlphaTerm>>;

class AlphaVector {
 public:
  // All constructors enforce: coordinates positive and pairwise distinct (kDomain).
  static AlphaVector from_values(std::vector<BigFloat> values);
  static AlphaVector from_decimal(std::span<const std::string> decimals, int precision_bits);
  static AlphaVector from_exact(ExactAlpha exact, int precision_bits);

  std::size_t size() const { return values_.size(); }
  const std::vector<BigFloat>& values() const { return values_; }
  const BigFloat& operator[](std::size_t i) const { return values_[i]; }
  const std::optional<ExactAlpha>& exact() const { return exact_; }
  int precision() const { return values_.empty() ? defaults::kPrecisionBits : values_.front().precision(); }

  // Each coordinate rounded once to double.
  std::vector<double> rounded() const;

 private:
  std::vector<BigFloat> values_;
  std::optional<ExactAlpha> exact_;
};

BigFloat evaluate_exact(std::span<const AlphaTerm> terms, int precision_bits);

// (a / q) log(p) / (2 pi)
BigFloat relation_target(const RelationRow& row, int precision_bits);

// b . alpha in the precision of alpha.
BigFloat dot(std::span<const std::int64_t> m, std::span<const BigFloat> alpha);

// max_j |b_j . alpha - target_j|
BigFloat max_residual(const RelationSystem& system, std::span<const BigFloat> alpha);

// Exact rational inverse of M, evaluated at `precision_bits`; requires r = n (kUnderdetermined).
AlphaVector solve_alpha(const RelationSystem& system, int precision_bits = defaults::kPrecisionBits);

struct DetectBounds {
  int max_norm = defaults::kDetectMaxNorm;
  std::uint64_t max_prime = defaults::kDetectMaxPrime;
  std::int64_t max_q = defaults::kDetectMaxQ;
  std::int64_t max_a = defaults::kDetectMaxA;
};

// Exhaustive scan for m . alpha = (a/q) log(p) / (2 pi) within `tolerance`, followed by
// greedy maximal-rank selection with distinct primes (ordered by sup-norm, then lexicographic).
RelationSystem detect_relations(const AlphaVector& alpha, const DetectBounds& bounds,
                                double tolerance = defaults::kDetectTolerance);

}  // namespace zfp
