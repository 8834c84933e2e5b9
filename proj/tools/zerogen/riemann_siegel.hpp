// Hardy Z-function evaluation and zero isolation, used only to produce
// reference tables of zeta zeros for tests and demos. The library itself
// never computes zeros; it ingests tables.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zfp::zerogen {

// Riemann-Siegel theta via its Stirling expansion; accurate to ~1e-13 for t >= 14.
double theta(double t);

// Z(t) = exp(i theta(t)) zeta(1/2 + it). Euler-Maclaurin below kEulerMaclaurinLimit,
// Riemann-Siegel with corrections C0..C4 above.
class HardyZ {
 public:
  static constexpr double kEulerMaclaurinLimit = 1000.0;

  explicit HardyZ(double t_max);

  double operator()(double t) const;
  double riemann_siegel(double t) const;
  double euler_maclaurin(double t) const;

 private:
  std::vector<double> log_n_;
  std::vector<double> inv_sqrt_n_;
};

// Gram point g_n: theta(g_n) = n pi, n >= -1.
double gram_point(long n, double hint = 0.0);

// First `count` positive ordinates in increasing order. Isolation uses Gram
// blocks (Rosser's rule, valid far beyond 10^7 zeros) with adaptive bisection;
// each bracket is refined to an absolute width below `tolerance`.
// `progress` (optional) receives the running zero count.
std::vector<double> compute_zeros(std::size_t count, double tolerance = 2e-10,
                                  const std::function<void(std::size_t)>& progress = {});

}  // namespace zfp::zerogen
