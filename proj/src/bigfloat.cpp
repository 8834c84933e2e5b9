#include "zfp/bigfloat.hpp"

#include <algorithm>
#include <memory>

#include "zfp/error.hpp"

namespace zfp {
namespace {

mpfr_prec_t widest(const BigFloat& a, const BigFloat& b) {
  return std::max<mpfr_prec_t>(a.precision(), b.precision());
}

void widen(mpfr_ptr x, mpfr_prec_t prec) {
  if (mpfr_get_prec(x) < prec) mpfr_prec_round(x, prec, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_string(std::string_view text, int precision_bits) {
  BigFloat out(precision_bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size() || !mpfr_number_p(out.value_))
    throw Error(ErrorCode::kParse, "not a decimal number: '" + s + "'");
  return out;
}

BigFloat BigFloat::from_integer(const mpz_class& value, int precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_z(out.value_, value.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from_rational(const mpq_class& value, int precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pi(int precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::log_over_two_pi(std::uint64_t n, int precision_bits) {
  BigFloat out(precision_bits + 8);
  mpfr_set_ui(out.value_, n, MPFR_RNDN);
  mpfr_log(out.value_, out.value_, MPFR_RNDN);
  out /= pi(precision_bits + 8);
  mpfr_div_2ui(out.value_, out.value_, 1, MPFR_RNDN);
  mpfr_prec_round(out.value_, precision_bits, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::with_precision(int precision_bits) const {
  BigFloat out(precision_bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(value_, widest(*this, rhs));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(value_, widest(*this, rhs));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(value_, widest(*this, rhs));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(value_, widest(*this, rhs));
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

mpz_class BigFloat::floor_integer() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

mpq_class BigFloat::to_rational() const {
  mpq_class out;
  if (is_zero()) return out;
  mpz_class mantissa;
  const long e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  out = mantissa;
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

std::string BigFloat::to_decimal(int significant_digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", significant_digits, value_);
  const std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

BigFloat abs(BigFloat x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat log(BigFloat x) {
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat exp(BigFloat x) {
  mpfr_exp(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat sqrt(BigFloat x) {
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  return x;
}

}  // namespace zfp
