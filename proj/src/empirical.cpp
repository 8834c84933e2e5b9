#include "zfp/empirical.hpp"

#include <cmath>

#include "zfp/error.hpp"
#include "zfp/format.hpp"
#include "zfp/landau.hpp"
#include "zfp/parallel.hpp"
#include "zfp/summation.hpp"

namespace zfp {
namespace {

std::size_t zeros_upto(const ZeroSet& zeros, double T) {
  if (T > zeros.t_max())
    throw Error(ErrorCode::kInsufficientData, "T = " + format_shortest(T) + " exceeds the largest zero " +
                                                  format_shortest(zeros.t_max()));
  return T <= 0.0 ? 0 : zeros.count_upto(T);
}

void require_plane(const AlphaVector& alpha) {
  if (alpha.size() != 2) throw Error(ErrorCode::kDimension, "statistic needs n = 2");
}

double frac(double v) { return v - std::floor(v); }

}  // namespace

std::vector<double> fractional_parts(const ZeroSet& zeros, const AlphaVector& alpha, double T) {
  const std::size_t count = zeros_upto(zeros, T);
  const auto a = alpha.rounded();
  const std::size_t n = a.size();
  std::vector<double> out(count * n);
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < n; ++i) out[k * n + i] = frac(zeros[k] * a[i]);
  return out;
}

int bin_index(double f, int resolution) {
  const double r = resolution;
  int k = static_cast<int>(std::floor(f * r));
  k = std::clamp(k, 0, resolution - 1);
  while (k + 1 < resolution && static_cast<double>(k + 1) / r <= f) ++k;
  while (k > 0 && static_cast<double>(k) / r > f) --k;
  return k;
}

long double m_statistic(const ZeroSet& zeros, const AlphaVector& alpha, double y1, double y2, double T) {
  require_plane(alpha);
  if (!(y1 >= 0.0 && y1 <= 1.0 && y2 >= 0.0 && y2 <= 1.0))
    throw Error(ErrorCode::kDomain, "y1, y2 must lie in [0, 1]");
  if (!(T > 0.0)) throw Error(ErrorCode::kDomain, "T must be positive");
  const std::size_t n_obs = zeros_upto(zeros, T);
  const double a1 = alpha[0].to_double();
  const double a2 = alpha[1].to_double();
  std::int64_t inside = 0;
  for (std::size_t k = 0; k < n_obs; ++k)
    if (frac(zeros[k] * a1) < y1 && frac(zeros[k] * a2) < y2) ++inside;
  const long double t = T;
  return static_cast<long double>(inside) / t -
         static_cast<long double>(y1) * static_cast<long double>(y2) * static_cast<long double>(n_obs) / t;
}

DmResult dm_grid(const ZeroSet& zeros, const AlphaVector& alpha, int resolution, double T, const DmOptions& options) {
  require_plane(alpha);
  if (resolution < 1) throw Error(ErrorCode::kInvalidArgument, "resolution must be >= 1");
  if (!(T > 0.0)) throw Error(ErrorCode::kDomain, "T must be positive");
  DmResult out;
  out.T = T;
  out.n_obs = zeros_upto(zeros, T);
  out.n_used = options.asymptotic_count ? n_asymptotic(T) : static_cast<double>(out.n_obs);

  const double a1 = alpha[0].to_double();
  const double a2 = alpha[1].to_double();
  const std::size_t cells = static_cast<std::size_t>(resolution) * resolution;
  const std::size_t chunk = defaults::kSumChunkSize;
  const std::size_t n_chunks = (out.n_obs + chunk - 1) / chunk;
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, std::max<std::size_t>(n_chunks, 1)));

  // one histogram per worker; integer merge is order independent
  std::vector<std::vector<std::int64_t>> local(workers, std::vector<std::int64_t>(cells, 0));
  parallel_for(workers, workers, [&](std::size_t w) {
    auto& hist = local[w];
    for (std::size_t c = w; c < n_chunks; c += workers) {
      const std::size_t end = std::min(out.n_obs, (c + 1) * chunk);
      for (std::size_t k = c * chunk; k < end; ++k) {
        const int i = bin_index(frac(zeros[k] * a1), resolution);
        const int j = bin_index(frac(zeros[k] * a2), resolution);
        ++hist[static_cast<std::size_t>(i) * resolution + j];
      }
    }
  });
  out.counts.assign(cells, 0);
  for (const auto& hist : local)
    for (std::size_t c = 0; c < cells; ++c) out.counts[c] += hist[c];

  const auto r2 = static_cast<std::int64_t>(resolution) * resolution;
  const auto n_obs = static_cast<std::int64_t>(out.n_obs);
  out.excess.resize(cells);
  out.grid = Grid2D(resolution);
  for (std::size_t c = 0; c < cells; ++c) {
    out.excess[c] = r2 * out.counts[c] - n_obs;
    const double dm = options.asymptotic_count
                          ? (static_cast<double>(r2 * out.counts[c]) - out.n_used) / T
                          : static_cast<double>(out.excess[c]) / T;
    out.grid.at(static_cast<int>(c / resolution), static_cast<int>(c % resolution)) = dm;
  }

  auto& meta = out.grid.metadata();
  meta["statistic"] = "DM";
  meta["alpha"] = {alpha[0].to_decimal(40), alpha[1].to_decimal(40)};
  meta["T"] = T;
  meta["n_obs"] = out.n_obs;
  meta["delta"] = "1/" + std::to_string(resolution);
  meta["count_mode"] = options.asymptotic_count ? "asymptotic" : "observed";
  meta["dataset"] = zeros.source();
  return out;
}

double h_sum(const ZeroSet& zeros, const TestFunction& h, const AlphaVector& alpha, double T, unsigned workers) {
  const std::size_t n_obs = zeros_upto(zeros, T);
  if (h.coefficients().empty()) return 0.0;
  if (h.dimension() != alpha.size()) throw Error(ErrorCode::kDimension, "test function and alpha differ in dimension");
  if (!(T > 0.0)) throw Error(ErrorCode::kDomain, "T must be positive");
  const int prec = alpha.precision();
  const BigFloat two_pi = BigFloat::pi(prec) * 2L;
  const ZeroSumOptions options{workers, false};

  // the c_0 N term cancels against N int h; what is left pairs m with -m
  double sum = 0.0;
  for (const auto& [m, c] : h.coefficients()) {
    bool zero_freq = true;
    for (const auto v : m) zero_freq = zero_freq && v == 0;
    if (zero_freq) continue;
    const BigFloat dot_m = dot(m, alpha.values());
    if (dot_m.is_zero()) {
      sum += c.real() * static_cast<double>(n_obs);
    } else if (dot_m.sign() > 0) {
      const double omega = (two_pi * dot_m).to_double();
      sum += 2.0 * (c * zero_sum_log(zeros, omega, T, options)).real();
    }
  }
  return sum / T;
}

TheoremReport theorem_check(const ZeroSet& zeros, const TestFunction& h, const RelationSystem& system,
                            const AlphaVector& alpha, const std::vector<double>& T_list, unsigned workers,
                            double tolerance) {
  if (system.n != alpha.size()) throw Error(ErrorCode::kDimension, "relation system and alpha differ in dimension");
  if (T_list.empty()) throw Error(ErrorCode::kInvalidArgument, "T list is empty");
  for (std::size_t i = 0; i < T_list.size(); ++i) {
    if (!(T_list[i] > 0.0)) throw Error(ErrorCode::kDomain, "T values must be positive");
    if (i > 0 && !(T_list[i] > T_list[i - 1])) throw Error(ErrorCode::kInvalidArgument, "T list must be increasing");
  }
  if (T_list.back() > zeros.t_max())
    throw Error(ErrorCode::kInsufficientData, "largest T exceeds the largest zero " + format_shortest(zeros.t_max()));

  TheoremReport report;
  for (std::size_t j = 0; j < system.rows.size(); ++j) {
    const auto& row = system.rows[j];
    const double res = abs(dot(row.b, alpha.values()) - relation_target(row, alpha.precision())).to_double();
    report.consistency_residual = std::max(report.consistency_residual, res);
    if (!(res <= tolerance))
      throw Error(ErrorCode::kInconsistentAlpha, "row " + std::to_string(j + 1) + " (p = " + std::to_string(row.p) +
                                                     ") misses its target by " + format_shortest(res));
  }

  report.integral = integral_h_g(system, h);
  for (const double T : T_list) {
    TheoremRow row;
    row.T = T;
    row.n_obs = zeros.count_upto(T);
    row.h_sum = h_sum(zeros, h, alpha, T, workers);
    row.difference = row.h_sum - report.integral;
    report.rows.push_back(row);
  }
  const double last = std::abs(report.rows.back().difference);
  const double median = std::abs(report.rows[(report.rows.size() - 1) / 2].difference);
  report.tail_not_improving = last > defaults::kTailNoiseAllowance * median;
  return report;
}

nlohmann::json to_json(const TheoremReport& report) {
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"T", r.T}, {"n_obs", r.n_obs}, {"h_sum", r.h_sum}, {"difference", r.difference}});
  return {{"integral_h_g", report.integral},
          {"consistency_residual", report.consistency_residual},
          {"tail_not_improving", report.tail_not_improving},
          {"rows", rows}};
}

}  // namespace zfp
