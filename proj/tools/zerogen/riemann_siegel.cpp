#include "riemann_siegel.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zfp::zerogen {
namespace {

#include "rs_coefficients.inc"

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2k} / (2k)! for k = 1..12.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

double theta_prime(double t) { return 0.5 * std::log(t / kTwoPi); }

double horner(const double* c, int degree, double u) {
  double acc = 0.0;
  for (int i = degree; i >= 0; --i) acc = acc * u + c[i];
  return acc;
}

struct Sample {
  double t;
  double z;
};

int sign_changes(const std::vector<Sample>& s) {
  int count = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i - 1].z < 0) != (s[i].z < 0)) ++count;
  return count;
}

}  // namespace

double theta(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  double tail = 511.0 / 1216512.0;
  tail = tail * inv2 + 127.0 / 430080.0;
  tail = tail * inv2 + 31.0 / 80640.0;
  tail = tail * inv2 + 7.0 / 5760.0;
  tail = tail * inv2 + 1.0 / 48.0;
  return 0.5 * t * (std::log(t / kTwoPi) - 1.0) - kPi / 8.0 + tail * inv;
}

HardyZ::HardyZ(double t_max) {
  // Euler-Maclaurin below the limit needs n < t/2 + 20; Riemann-Siegel needs n <= sqrt(t/2pi).
  const auto n_max = static_cast<std::size_t>(
      std::max(std::sqrt(t_max / kTwoPi) + 2.0, kEulerMaclaurinLimit / 2.0 + 24.0));
  log_n_.resize(n_max + 1);
  inv_sqrt_n_.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    log_n_[n] = std::log(static_cast<double>(n));
    inv_sqrt_n_[n] = 1.0 / std::sqrt(static_cast<double>(n));
  }
}

double HardyZ::operator()(double t) const {
  return t < kEulerMaclaurinLimit ? euler_maclaurin(t) : riemann_siegel(t);
}

double HardyZ::riemann_siegel(double t) const {
  const double tau = std::sqrt(t / kTwoPi);
  const auto n_terms = static_cast<std::size_t>(tau);
  if (n_terms + 1 >= log_n_.size()) throw std::out_of_range("HardyZ: t beyond table range");
  const double th = theta(t);
  double main = 0.0;
  for (std::size_t n = 1; n <= n_terms; ++n) main += inv_sqrt_n_[n] * std::cos(th - t * log_n_[n]);

  const double u = tau - static_cast<double>(n_terms) - 0.5;
  const double inv_tau = 1.0 / tau;
  double correction = 0.0;
  for (int k = 4; k >= 0; --k)
    correction = correction * inv_tau + horner(kRsCoefficients[k], kRsSeriesDegree, u);
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;
  return 2.0 * main + sign * correction / std::sqrt(tau);
}

double HardyZ::euler_maclaurin(double t) const {
  using cd = std::complex<double>;
  const cd s(0.5, t);
  const auto n_cut = static_cast<std::size_t>(t / 2.0) + 20;
  if (n_cut >= log_n_.size()) throw std::out_of_range("HardyZ: t beyond Euler-Maclaurin range");
  cd zeta = 0.0;
  for (std::size_t n = 1; n < n_cut; ++n) {
    const double phase = t * log_n_[n];
    zeta += inv_sqrt_n_[n] * cd(std::cos(phase), -std::sin(phase));
  }
  const double big_n = static_cast<double>(n_cut);
  const double phase = t * log_n_[n_cut];
  const cd n_pow_minus_s = inv_sqrt_n_[n_cut] * cd(std::cos(phase), -std::sin(phase));
  zeta += n_pow_minus_s * big_n / (s - 1.0) + 0.5 * n_pow_minus_s;

  cd rising = s;  // s (s+1) ... (s+2k-2)
  double n_power = 1.0 / big_n;
  for (int k = 1; k <= 12; ++k) {
    zeta += kBernoulliOverFactorial[k - 1] * rising * n_pow_minus_s * n_power;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    n_power /= big_n * big_n;
  }
  const double th = theta(t);
  return (cd(std::cos(th), std::sin(th)) * zeta).real();
}

double gram_point(long n, double hint) {
  const double target = static_cast<double>(n) * kPi;
  double g = hint > 0.0 ? hint : std::max(30.0, kTwoPi * (static_cast<double>(n) + 10.0));
  for (int iter = 0; iter < 100; ++iter) {
    const double step = (theta(g) - target) / theta_prime(g);
    g -= step;
    if (std::abs(step) < 1e-12 * std::max(1.0, g)) break;
  }
  return g;
}

std::vector<double> compute_zeros(std::size_t count, double tolerance,
                                  const std::function<void(std::size_t)>& progress) {
  std::vector<double> zeros;
  if (count == 0) return zeros;
  zeros.reserve(count);

  // Smooth count (T/2pi) log(T/2pi e) + 7/8 bounds the height needed.
  double t_est = 100.0;
  while (t_est / kTwoPi * (std::log(t_est / kTwoPi) - 1.0) + 0.875 < static_cast<double>(count) + 200.0)
    t_est *= 1.05;
  const HardyZ z_fn(t_est * 1.05 + 100.0);

  const auto refine = [&](const Sample& lo, const Sample& hi) {
    std::uintmax_t max_iter = 200;
    auto tol = [tolerance](double a, double b) { return std::abs(b - a) <= tolerance; };
    const auto r = boost::math::tools::toms748_solve([&](double t) { return z_fn(t); }, lo.t, hi.t, lo.z,
                                                     hi.z, tol, max_iter);
    return 0.5 * (r.first + r.second);
  };

  const auto is_good = [](long n, double z) { return (n % 2 == 0) ? z > 0.0 : z < 0.0; };

  long n = -1;
  double g = gram_point(-1, 9.67);
  std::vector<Sample> block{{g, z_fn(g)}};
  long block_start = -1;
  if (!is_good(-1, block.front().z)) throw std::runtime_error("zerogen: g_{-1} unexpectedly bad");

  while (zeros.size() < count) {
    ++n;
    g = gram_point(n, g + kPi / theta_prime(g));
    block.push_back({g, z_fn(g)});
    if (!is_good(n, block.back().z)) continue;

    const int expected = static_cast<int>(n - block_start);
    int found = sign_changes(block);
    for (int round = 0; found < expected && round < 16; ++round) {
      std::vector<Sample> finer;
      finer.reserve(2 * block.size());
      for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        finer.push_back(block[i]);
        const double mid = 0.5 * (block[i].t + block[i + 1].t);
        finer.push_back({mid, z_fn(mid)});
      }
      finer.push_back(block.back());
      block = std::move(finer);
      found = sign_changes(block);
    }
    if (found != expected)
      throw std::runtime_error("zerogen: Gram block [" + std::to_string(block_start) + ", " +
                               std::to_string(n) + "] has " + std::to_string(found) +
                               " sign changes, expected " + std::to_string(expected));

    for (std::size_t i = 1; i < block.size(); ++i)
      if ((block[i - 1].z < 0) != (block[i].z < 0)) zeros.push_back(refine(block[i - 1], block[i]));
    if (progress) progress(zeros.size());

    block = {block.back()};
    block_start = n;
  }
  zeros.resize(count);
  return zeros;
}

}  // namespace zfp::zerogen
