#pragma once

// Reproducible summation: fixed-size chunks summed with Kahan compensation,
// chunk partials combined by a pairwise tree in chunk-index order. The result
// is bitwise independent of the worker count.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "zfp/defaults.hpp"
#include "zfp/parallel.hpp"

namespace zfp {

class KahanSum {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

namespace detail {

inline std::complex<double> pairwise(std::span<const std::complex<double>> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  return pairwise(parts.first(half)) + pairwise(parts.subspan(half));
}

}  // namespace detail

// term(i) -> std::complex<double>, for i in [0, n).
template <typename Term>
std::complex<double> reproducible_sum(std::size_t n, const Term& term, unsigned workers,
                                      std::size_t chunk_size = defaults::kSumChunkSize) {
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<std::complex<double>> partials(n_chunks);
  parallel_for(n_chunks, workers, [&](std::size_t c) {
    KahanSum re;
    KahanSum im;
    const std::size_t end = std::min(n, (c + 1) * chunk_size);
    for (std::size_t i = c * chunk_size; i < end; ++i) {
      const std::complex<double> v = term(i);
      re.add(v.real());
      im.add(v.imag());
    }
    partials[c] = {re.value(), im.value()};
  });
  return detail::pairwise(partials);
}

}  // namespace zfp
