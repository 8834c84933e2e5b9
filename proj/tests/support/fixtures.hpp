#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "zfp/relations.hpp"
#include "zfp/zeros.hpp"

namespace fixtures {

inline constexpr double kPi = std::numbers::pi;

// alpha_1 + alpha_2 = log 2 / 2pi, alpha_1 - alpha_2 = (1/2) log 3 / 2pi
inline zfp::RelationSystem example1() {
  return zfp::validate({2, {{{1, 1}, 1, 1, 2}, {{1, -1}, 1, 2, 3}}});
}

// 2 alpha_1 + alpha_2 = log 5 / 2pi, 2 alpha_1 + 3 alpha_2 = log 7 / 2pi
inline zfp::RelationSystem example2() {
  return zfp::validate({2, {{{2, 1}, 1, 1, 5}, {{2, 3}, 1, 1, 7}}});
}

inline zfp::RelationSystem empty_system(std::size_t n = 2) { return {n, {}}; }

inline std::filesystem::path data_dir() { return ZFP_TEST_DATA_DIR; }

// Reference table produced by the ctest fixture (generator + ingest).
inline const zfp::ZeroSet& reference_zeros() {
  static const zfp::ZeroSet zeros = zfp::load_zeros_file(data_dir() / "zeros_2e6.zfpz");
  return zeros;
}

// First `count` zeros of the reference table.
inline zfp::ZeroSet first_zeros(std::size_t count) {
  const auto all = reference_zeros().gammas();
  return zfp::ZeroSet(std::vector<double>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)),
                      "reference:" + std::to_string(count));
}

// Height of the k-th zero (1-based).
inline double height(std::size_t k) { return reference_zeros()[k - 1]; }

// Midpoint rule on the R x R torus grid.
inline double midpoint_2d(int R, const std::function<double(double, double)>& f) {
  double sum = 0.0;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) sum += f((i + 0.5) / R, (j + 0.5) / R);
  return sum / (static_cast<double>(R) * R);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace fixtures
