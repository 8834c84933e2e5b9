#pragma once

// Fractional-part statistics over zeros: M(y1, y2; T), the binned DM grid,
// weighted sums (1/T)(sum h(gamma alpha) - N(T) int h) and convergence checks.

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "zfp/density.hpp"
#include "zfp/grid.hpp"
#include "zfp/relations.hpp"
#include "zfp/zeros.hpp"

namespace zfp {

// Row-major ({alpha_1 gamma}, ..., {alpha_n gamma}) for every gamma <= T, with alpha
// rounded once to double.
std::vector<double> fractional_parts(const ZeroSet& zeros, const AlphaVector& alpha, double T);

// Index of the cell [i/R, (i+1)/R) holding frac, with edges compared as double(i)/R.
int bin_index(double frac, int resolution);

// (1/T) #{gamma <= T : {alpha_1 gamma} < y1, {alpha_2 gamma} < y2} - y1 y2 N_obs / T.
long double m_statistic(const ZeroSet& zeros, const AlphaVector& alpha, double y1, double y2, double T);

struct DmOptions {
  unsigned workers = 1;
  bool asymptotic_count = false;  // N(T) from n_asymptotic instead of the observed count
};

struct DmResult {
  Grid2D grid{1};                     // DM(i, j)
  std::vector<std::int64_t> counts;   // R x R, row-major
  std::vector<std::int64_t> excess;   // R^2 count - N_obs; sums to 0 (observed-count mode)
  std::size_t n_obs = 0;
  double n_used = 0.0;                // N(T) entering the statistic
  double T = 0.0;
};

// DM(i, j) = (count(i, j) / T - Delta^2 N / T) / Delta^2 with Delta = 1 / R.
DmResult dm_grid(const ZeroSet& zeros, const AlphaVector& alpha, int resolution, double T,
                 const DmOptions& options = {});

// (1/T)(sum_{gamma <= T} h(gamma alpha) - N_obs c_0), via one zero sum per +-m pair.
double h_sum(const ZeroSet& zeros, const TestFunction& h, const AlphaVector& alpha, double T, unsigned workers = 1);

struct TheoremRow {
  double T = 0.0;
  std::size_t n_obs = 0;
  double h_sum = 0.0;
  double difference = 0.0;  // h_sum - integral
};

struct TheoremReport {
  double integral = 0.0;  // integral of h g
  std::vector<TheoremRow> rows;
  double consistency_residual = 0.0;  // max_j |b_j . alpha - P_j|
  bool tail_not_improving = false;    // |diff(last)| > 1.2 |diff(median)|
};

// Throws kInconsistentAlpha naming the first row whose residual exceeds `tolerance`.
TheoremReport theorem_check(const ZeroSet& zeros, const TestFunction& h, const RelationSystem& system,
                            const AlphaVector& alpha, const std::vector<double>& T_list, unsigned workers = 1,
                            double tolerance = defaults::kConsistencyTolerance);

nlohmann::json to_json(const TheoremReport& report);

}  // namespace zfp
