#pragma once

// von Mangoldt helpers and Landau-type sums over zeros.

#include <complex>
#include <cstdint>

#include "json.hpp"
#include "zfp/zeros.hpp"

namespace zfp {

// log p for n = p^k, else 0. Throws Error(kDomain) for n = 0.
double von_mangoldt(std::uint64_t n);

// Prime power closest to x > 1; equidistant candidates resolve to the smaller one.
std::uint64_t nearest_prime_power(double x);

struct ZeroSumOptions {
  unsigned workers = 1;
  bool extended_phase = false;  // phase gamma * omega in long double, reduced mod 2 pi
};

// sum_{0 < gamma <= T} exp(i gamma omega). Any real omega; throws kInsufficientData for T > t_max.
std::complex<double> zero_sum_log(const ZeroSet& zeros, double omega, double T, const ZeroSumOptions& options = {});

// sum_{0 < gamma <= T} x^{i gamma}, x > 1.
std::complex<double> zero_sum(const ZeroSet& zeros, double x, double T, const ZeroSumOptions& options = {});

// Main term of sum_{0 < gamma <= T} x^rho:
//   -(Lambda(n_x) / 2 pi) (exp(i T log(x/n_x)) - 1) / (i log(x/n_x)),
// or -T Lambda(n_x) / (2 pi) when |log(x/n_x)| < 2^-40.
std::complex<double> landau_main_term(double x, double T);

// (T/2pi) log(T/2pi) (exp(iz) - 1)/(iz), z = T log x; for x close to 1.
std::complex<double> small_x_main_term(double x, double T);

struct LandauReport {
  double x = 0.0;
  double T = 0.0;
  std::size_t zeros_used = 0;
  std::complex<double> sum;        // sum x^{i gamma}
  std::complex<double> main_term;  // landau_main_term / sqrt(x), same scale as sum
  std::complex<double> residual;   // sum - main_term
  std::uint64_t n_x = 0;
  double lambda_nx = 0.0;
  // Sizes of the two error components x log^2(2xT) and log(2T)/log x, divided by sqrt(x).
  double error_scale_near = 0.0;
  double error_scale_far = 0.0;
};

LandauReport landau_report(const ZeroSet& zeros, double x, double T, const ZeroSumOptions& options = {});

nlohmann::json to_json(const LandauReport& report);

}  // namespace zfp
