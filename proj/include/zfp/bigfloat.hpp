#pragma once

// Thin RAII wrapper over an MPFR value with an explicit precision in bits.
// Binary operations produce the larger of the two operand precisions;
// rounding is to nearest throughout.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "zfp/defaults.hpp"

namespace zfp {

class BigFloat {
 public:
  explicit BigFloat(int precision_bits = defaults::kPrecisionBits);
  BigFloat(double value, int precision_bits);
  BigFloat(long value, int precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  // Decimal or scientific notation; throws Error(kParse) on malformed input.
  static BigFloat from_string(std::string_view text, int precision_bits);
  static BigFloat from_integer(const mpz_class& value, int precision_bits);
  static BigFloat from_rational(const mpq_class& value, int precision_bits);
  static BigFloat pi(int precision_bits);
  // log(n) / (2 pi)
  static BigFloat log_over_two_pi(std::uint64_t n, int precision_bits);

  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  // Copy rounded (or exactly widened) to `precision_bits`.
  BigFloat with_precision(int precision_bits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  friend BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
  friend BigFloat operator*(long lhs, BigFloat rhs) { return rhs *= lhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  mpz_class floor_integer() const;
  // Exact value of the binary floating-point number.
  mpq_class to_rational() const;
  // e with 2^(e-1) <= |x| < 2^e; undefined for zero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }
  std::string to_decimal(int significant_digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(BigFloat x);
BigFloat log(BigFloat x);
BigFloat exp(BigFloat x);
BigFloat sqrt(BigFloat x);

}  // namespace zfp
