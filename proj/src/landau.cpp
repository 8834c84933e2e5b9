#include "zfp/landau.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zfp/arith.hpp"
#include "zfp/defaults.hpp"
#include "zfp/error.hpp"
#include "zfp/format.hpp"
#include "zfp/summation.hpp"

namespace zfp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

void require_x(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw Error(ErrorCode::kDomain, "x must be a finite real > 1");
}

// (exp(iz) - 1) / (iz) without cancellation near z = 0.
std::complex<double> expm1_over(double z) {
  if (std::abs(z) < 1e-300) return {1.0, 0.0};
  const double h = std::sin(0.5 * z);
  return {std::sin(z) / z, 2.0 * h * h / z};
}

}  // namespace

double von_mangoldt(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "von Mangoldt function is defined for n >= 1");
  const auto p = prime_power_base(n);
  return p ? std::log(static_cast<double>(*p)) : 0.0;
}

std::uint64_t nearest_prime_power(double x) {
  require_x(x);
  if (x >= 0x1p62) throw Error(ErrorCode::kDomain, "x too large for prime power search");
  std::uint64_t lo = static_cast<std::uint64_t>(std::floor(x));
  while (lo >= 2 && !prime_power_base(lo)) --lo;
  std::uint64_t hi = static_cast<std::uint64_t>(std::ceil(x));
  if (hi < 2) hi = 2;
  while (!prime_power_base(hi)) ++hi;
  if (lo < 2) return hi;
  const double d_lo = x - static_cast<double>(lo);
  const double d_hi = static_cast<double>(hi) - x;
  return d_hi < d_lo ? hi : lo;
}

std::complex<double> zero_sum_log(const ZeroSet& zeros, double omega, double T, const ZeroSumOptions& options) {
  if (!std::isfinite(omega)) throw Error(ErrorCode::kDomain, "frequency must be finite");
  if (T > zeros.t_max())
    throw Error(ErrorCode::kInsufficientData, "T = " + format_shortest(T) + " exceeds the largest zero " +
                                                  format_shortest(zeros.t_max()));
  const std::size_t n = T <= 0.0 ? 0 : zeros.count_upto(T);
  const auto gammas = zeros.gammas();
  if (options.extended_phase) {
    const long double w = omega;
    return reproducible_sum(
        n,
        [&](std::size_t i) {
          const long double theta = std::fmod(static_cast<long double>(gammas[i]) * w, kTwoPiL);
          return std::complex<double>(static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta)));
        },
        options.workers);
  }
  return reproducible_sum(
      n,
      [&](std::size_t i) {
        const double theta = gammas[i] * omega;
        return std::complex<double>(std::cos(theta), std::sin(theta));
      },
      options.workers);
}

std::complex<double> zero_sum(const ZeroSet& zeros, double x, double T, const ZeroSumOptions& options) {
  require_x(x);
  return zero_sum_log(zeros, std::log(x), T, options);
}

std::complex<double> landau_main_term(double x, double T) {
  require_x(x);
  if (!(T > 0.0)) throw Error(ErrorCode::kDomain, "T must be positive");
  const std::uint64_t n_x = nearest_prime_power(x);
  const double lambda = von_mangoldt(n_x);
  const double L = std::log(x / static_cast<double>(n_x));
  if (std::abs(L) < defaults::kDegenerateLogRatio) return {-T * lambda / (2.0 * kPi), 0.0};
  // (e^{iTL} - 1) / (iL) = T (e^{iz} - 1)/(iz), z = T L
  return -(lambda / (2.0 * kPi)) * T * expm1_over(T * L);
}

std::complex<double> small_x_main_term(double x, double T) {
  require_x(x);
  if (!(T > 2.0 * kPi)) throw Error(ErrorCode::kDomain, "T must exceed 2 pi");
  const double u = T / (2.0 * kPi);
  const double z = T * std::log1p(x - 1.0);
  return u * std::log(u) * expm1_over(z);
}

LandauReport landau_report(const ZeroSet& zeros, double x, double T, const ZeroSumOptions& options) {
  LandauReport r;
  r.x = x;
  r.T = T;
  r.sum = zero_sum(zeros, x, T, options);
  r.zeros_used = zeros.count_upto(T);
  r.n_x = nearest_prime_power(x);
  r.lambda_nx = von_mangoldt(r.n_x);
  const double root = std::sqrt(x);
  r.main_term = landau_main_term(x, T) / root;
  r.residual = r.sum - r.main_term;
  const double l2 = std::log(2.0 * x * T);
  r.error_scale_near = x * l2 * l2 / root;
  r.error_scale_far = std::log(2.0 * T) / std::log(x) / root;
  return r;
}

nlohmann::json to_json(const LandauReport& r) {
  auto cplx = [](std::complex<double> z) { return nlohmann::json{{"re", z.real()}, {"im", z.imag()}}; };
  return {{"x", r.x},
          {"T", r.T},
          {"zeros_used", r.zeros_used},
          {"sum", cplx(r.sum)},
          {"main_term", cplx(r.main_term)},
          {"residual", cplx(r.residual)},
          {"n_x", r.n_x},
          {"lambda_nx", r.lambda_nx},
          {"error_scale", {{"x_log2_2xT", r.error_scale_near}, {"log_2T_over_log_x", r.error_scale_far}}}};
}

}  // namespace zfp
