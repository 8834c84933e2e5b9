#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace zfp {

// Ordered table of ordinates gamma of nontrivial zeta zeros (rho = 1/2 + i gamma).
// Immutable after construction.
class ZeroSet {
 public:
  ZeroSet() = default;
  // Throws Error(kNonMonotone) unless strictly increasing and positive.
  explicit ZeroSet(std::vector<double> gammas, std::string source = {});

  std::span<const double> gammas() const { return gammas_; }
  std::size_t count() const { return gammas_.size(); }
  bool empty() const { return gammas_.empty(); }
  double t_max() const { return gammas_.empty() ? 0.0 : gammas_.back(); }
  double operator[](std::size_t i) const { return gammas_[i]; }

  // Number of gamma <= T (binary search).
  std::size_t count_upto(double T) const;

  // Free-form provenance label (file name, generator parameters, ...).
  const std::string& source() const { return source_; }

  friend bool operator==(const ZeroSet& a, const ZeroSet& b);

 private:
  std::vector<double> gammas_;
  std::string source_;
};

// One decimal per line; '#' lines and blank lines are skipped.
ZeroSet parse_zeros(std::istream& in, std::string source = {});

inline constexpr char kCacheMagic[4] = {'Z', 'F', 'P', 'Z'};
inline constexpr std::uint32_t kCacheVersion = 1;
inline constexpr std::size_t kCacheHeaderBytes = 16;

// Little-endian binary cache: magic, u32 version, u64 count, count x f64.
std::uint64_t write_cache(const ZeroSet& zeros, std::ostream& out);
ZeroSet load_cache(std::istream& in, std::string source = {});

// Reads either format, sniffing the cache magic.
ZeroSet load_zeros_file(const std::filesystem::path& path);

// (T/2pi) log(T/(2 pi e)) + 7/8; throws Error(kDomain) for T <= 1.
double n_asymptotic(double T);

}  // namespace zfp
