#pragma once

// The limiting density g_alpha determined by a relation system:
//
//   g(x) = -(1/pi) sum_j log p_j Re sum_{k>=1} p_j^{-a_j k/2} exp(-2 pi i k q_j (b_j . x))
//
// evaluated in closed form (geometric resummation) or by truncated series,
// plus its Fourier coefficients and pairings with trigonometric polynomials.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zfp/defaults.hpp"
#include "zfp/grid.hpp"
#include "zfp/relations.hpp"

namespace zfp {

using Frequency = std::vector<std::int64_t>;

// Real trigonometric polynomial h(x) = sum_m c_m exp(2 pi i m . x) with c_{-m} = conj(c_m).
class TestFunction {
 public:
  struct Entry {
    Frequency m;
    std::complex<double> c;
  };

  TestFunction() = default;

  // Completes Hermitian symmetry. Rejects (kInvalidTestFunction) entries of the wrong
  // dimension, a non-real c_0, and duplicates that disagree after completion.
  static TestFunction from_entries(std::size_t dimension, std::span<const Entry> entries, double decay_b = 0.0,
                                   double decay_c = 0.0);

  std::size_t dimension() const { return dimension_; }
  const std::map<Frequency, std::complex<double>>& coefficients() const { return coeffs_; }
  std::complex<double> coefficient(const Frequency& m) const;
  double mean() const;  // c_0 = integral of h
  double max_abs_coefficient() const;
  std::int64_t max_norm() const;
  double evaluate(std::span<const double> x) const;

  // Reporting only: declared |c_m| <= C (1 + ||m||)^-B.
  double decay_b() const { return decay_b_; }
  double decay_c() const { return decay_c_; }

  TestFunction scaled(double factor) const;
  friend TestFunction operator+(const TestFunction& a, const TestFunction& b);

 private:
  std::size_t dimension_ = 0;
  std::map<Frequency, std::complex<double>> coeffs_;
  double decay_b_ = 0.0;
  double decay_c_ = 0.0;
};

// Closed form; x in [0,1)^n (any real x is reduced). Zero for r = 0.
double g_eval(const RelationSystem& system, std::span<const double> x);

// Series truncated after K terms per row.
double g_eval_series(const RelationSystem& system, std::span<const double> x, int K);

// Bound on |g_eval - g_eval_series(K)|.
double g_series_tail_bound(const RelationSystem& system, int K);

// (1/pi) sum_j log p_j / (p_j^{a_j/2} - 1); attained at x = 0.
double g_sup_bound(const RelationSystem& system);

// Fourier coefficient at m: -(log p_j) p_j^{-a_j k/2} / (2 pi) when m = +-k q_j b_j, else 0.
std::complex<double> g_fourier_coefficient(const RelationSystem& system, std::span<const std::int64_t> m);

// integral over the torus of h g.
double integral_h_g(const RelationSystem& system, const TestFunction& h);

// Cell-centre samples of g for n = 2, R >= 2.
Grid2D g_grid(const RelationSystem& system, int resolution, unsigned workers = 1);

}  // namespace zfp
