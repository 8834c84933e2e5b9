#include "zfp/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zfp/error.hpp"
#include "zfp/parallel.hpp"

namespace zfp {
namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t sup_norm(std::span<const std::int64_t> v) {
  std::int64_t out = 0;
  for (const auto x : v) out = std::max(out, x < 0 ? -x : x);
  return out;
}

Frequency negate(const Frequency& m) {
  Frequency out(m);
  for (auto& x : out) x = -x;
  return out;
}

// Fractional part of q (b . x), the phase of row j in turns.
double row_phase(const RelationRow& row, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < row.b.size(); ++i) s += static_cast<double>(row.b[i]) * (x[i] - std::floor(x[i]));
  s -= std::floor(s);
  s *= static_cast<double>(row.q);
  return s - std::floor(s);
}

double half_power(const RelationRow& row) {  // p^{a/2}
  return std::pow(static_cast<double>(row.p), 0.5 * static_cast<double>(row.a));
}

void check_dimension(const RelationSystem& system, std::size_t n) {
  if (system.n != n)
    throw Error(ErrorCode::kDimension, "point of dimension " + std::to_string(n) + " for a system with n = " +
                                           std::to_string(system.n));
}

}  // namespace

TestFunction TestFunction::from_entries(std::size_t dimension, std::span<const Entry> entries, double decay_b,
                                        double decay_c) {
  TestFunction h;
  h.dimension_ = dimension;
  h.decay_b_ = decay_b;
  h.decay_c_ = decay_c;
  auto put = [&](const Frequency& m, std::complex<double> c) {
    auto [it, inserted] = h.coeffs_.try_emplace(m, c);
    if (!inserted && it->second != c)
      throw Error(ErrorCode::kInvalidTestFunction, "inconsistent duplicate coefficient at frequency index " +
                                                       std::to_string(std::distance(h.coeffs_.begin(), it)));
  };
  for (const auto& e : entries) {
    if (e.m.size() != dimension)
      throw Error(ErrorCode::kInvalidTestFunction, "frequency of dimension " + std::to_string(e.m.size()) +
                                                       ", expected " + std::to_string(dimension));
    if (sup_norm(e.m) == 0 && e.c.imag() != 0.0)
      throw Error(ErrorCode::kInvalidTestFunction, "c_0 must be real for a real-valued h");
    put(e.m, e.c);
    put(negate(e.m), std::conj(e.c));
  }
  return h;
}

std::complex<double> TestFunction::coefficient(const Frequency& m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? std::complex<double>{} : it->second;
}

double TestFunction::mean() const { return coefficient(Frequency(dimension_, 0)).real(); }

double TestFunction::max_abs_coefficient() const {
  double out = 0.0;
  for (const auto& [m, c] : coeffs_) out = std::max(out, std::abs(c));
  return out;
}

std::int64_t TestFunction::max_norm() const {
  std::int64_t out = 0;
  for (const auto& [m, c] : coeffs_) out = std::max(out, sup_norm(m));
  return out;
}

double TestFunction::evaluate(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& [m, c] : coeffs_) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) t += static_cast<double>(m[i]) * x[i];
    t -= std::floor(t);
    const double angle = 2.0 * kPi * t;
    sum += c.real() * std::cos(angle) - c.imag() * std::sin(angle);
  }
  return sum;
}

TestFunction TestFunction::scaled(double factor) const {
  TestFunction out(*this);
  for (auto& [m, c] : out.coeffs_) c *= factor;
  return out;
}

TestFunction operator+(const TestFunction& a, const TestFunction& b) {
  if (a.dimension_ != b.dimension_) throw Error(ErrorCode::kDimension, "adding test functions of different dimension");
  TestFunction out(a);
  for (const auto& [m, c] : b.coeffs_) out.coeffs_[m] += c;
  return out;
}

double g_eval(const RelationSystem& system, std::span<const double> x) {
  check_dimension(system, x.size());
  double sum = 0.0;
  for (const auto& row : system.rows) {
    const double s = half_power(row);
    const double c = std::cos(2.0 * kPi * row_phase(row, x));
    // Re(z / (1 - z)) with z = exp(-i phi) / s
    sum += std::log(static_cast<double>(row.p)) * (s * c - 1.0) / (s * s - 2.0 * s * c + 1.0);
  }
  return -sum / kPi;
}

double g_eval_series(const RelationSystem& system, std::span<const double> x, int K) {
  check_dimension(system, x.size());
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "series truncation K must be >= 1");
  double sum = 0.0;
  for (const auto& row : system.rows) {
    const double inv_s = 1.0 / half_power(row);
    const double phase = row_phase(row, x);
    double weight = 1.0;
    double partial = 0.0;
    for (int k = 1; k <= K; ++k) {
      weight *= inv_s;
      if (weight == 0.0) break;
      double turns = static_cast<double>(k) * phase;
      turns -= std::floor(turns);
      partial += weight * std::cos(2.0 * kPi * turns);
    }
    sum += std::log(static_cast<double>(row.p)) * partial;
  }
  return -sum / kPi;
}

double g_series_tail_bound(const RelationSystem& system, int K) {
  double bound = 0.0;
  for (const auto& row : system.rows) {
    const double inv_s = 1.0 / half_power(row);
    bound += std::log(static_cast<double>(row.p)) * std::pow(inv_s, K + 1) / (1.0 - inv_s);
  }
  return bound / kPi;
}

double g_sup_bound(const RelationSystem& system) {
  double bound = 0.0;
  for (const auto& row : system.rows) bound += std::log(static_cast<double>(row.p)) / (half_power(row) - 1.0);
  return bound / kPi;
}

std::complex<double> g_fourier_coefficient(const RelationSystem& system, std::span<const std::int64_t> m) {
  check_dimension(system, m.size());
  if (sup_norm(m) == 0) return {};
  std::complex<double> out;
  std::size_t matched = 0;
  for (const auto& row : system.rows) {
    // m = t q b for a nonzero integer t?
    std::int64_t t = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      const std::int64_t step = row.q * row.b[i];
      if (step == 0) {
        ok = m[i] == 0;
      } else if (m[i] % step != 0) {
        ok = false;
      } else if (t == 0) {
        t = m[i] / step;
        ok = t != 0;
      } else {
        ok = m[i] / step == t;
      }
    }
    if (!ok || t == 0) continue;
    const double k = static_cast<double>(t < 0 ? -t : t);
    const double p = static_cast<double>(row.p);
    out = -std::log(p) * std::pow(p, -0.5 * static_cast<double>(row.a) * k) / (2.0 * kPi);
    ++matched;
  }
  if (matched > 1) throw Error(ErrorCode::kAmbiguousFrequency, "frequency is a multiple of more than one relation row");
  return out;
}

double integral_h_g(const RelationSystem& system, const TestFunction& h) {
  if (h.coefficients().empty()) return 0.0;
  check_dimension(system, h.dimension());
  const double max_c = h.max_abs_coefficient();
  const std::int64_t support = h.max_norm();
  double sum = 0.0;
  for (const auto& row : system.rows) {
    const double inv_s = 1.0 / half_power(row);
    const std::int64_t step = row.q * sup_norm(row.b);
    double weight = 1.0;
    for (std::int64_t k = 1; k * step <= support; ++k) {
      weight *= inv_s;
      if (weight * max_c < defaults::kSeriesCutoff) break;
      Frequency m(row.b.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = k * row.q * row.b[i];
      sum += std::log(static_cast<double>(row.p)) * weight * h.coefficient(m).real();
    }
  }
  return -sum / kPi;
}

Grid2D g_grid(const RelationSystem& system, int resolution, unsigned workers) {
  if (system.n != 2) throw Error(ErrorCode::kDimension, "g_grid requires n = 2");
  if (resolution < 2) throw Error(ErrorCode::kInvalidArgument, "grid resolution must be >= 2");
  Grid2D grid(resolution);
  const double r = static_cast<double>(resolution);
  parallel_for(static_cast<std::size_t>(resolution), workers, [&](std::size_t i) {
    for (int j = 0; j < resolution; ++j) {
      const double x[2] = {(static_cast<double>(i) + 0.5) / r, (static_cast<double>(j) + 0.5) / r};
      grid.at(static_cast<int>(i), j) = g_eval(system, x);
    }
  });
  return grid;
}

}  // namespace zfp
