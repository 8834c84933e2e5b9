#include "zfp/zeros.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <numbers>
#include <ostream>

#include "zfp/error.hpp"

namespace zfp {
namespace {

void check_strictly_increasing(std::span<const double> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0) || !std::isfinite(g[i]))
      throw Error(ErrorCode::kNonMonotone, "zero #" + std::to_string(i + 1) + " is not a positive finite value");
    if (i > 0 && !(g[i] > g[i - 1]))
      throw Error(ErrorCode::kNonMonotone, "zero #" + std::to_string(i + 1) + " does not exceed its predecessor");
  }
}

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(const unsigned char* p) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(p[i]) << (8 * i);
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ZeroSet::ZeroSet(std::vector<double> gammas, std::string source)
    : gammas_(std::move(gammas)), source_(std::move(source)) {
  check_strictly_increasing(gammas_);
}

std::size_t ZeroSet::count_upto(double T) const {
  return static_cast<std::size_t>(std::upper_bound(gammas_.begin(), gammas_.end(), T) - gammas_.begin());
}

bool operator==(const ZeroSet& a, const ZeroSet& b) {
  return a.count() == b.count() &&
         std::equal(a.gammas_.begin(), a.gammas_.end(), b.gammas_.begin(),
                    [](double x, double y) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); });
}

ZeroSet parse_zeros(std::istream& in, std::string source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<double> gammas;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    const std::string_view line = trim(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;

    double value = 0.0;
    const auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || end != line.data() + line.size() || !std::isfinite(value))
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": not a number: '" + std::string(line) + "'");
    if (!(value > 0.0))
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": ordinate must be positive");
    if (!gammas.empty() && !(value > gammas.back()))
      throw Error(ErrorCode::kNonMonotone, "line " + std::to_string(line_no) + ": non-monotone sequence (" +
                                               std::string(line) + " after previous value)");
    gammas.push_back(value);
  }
  return ZeroSet(std::move(gammas), std::move(source));
}

std::uint64_t write_cache(const ZeroSet& zeros, std::ostream& out) {
  out.write(kCacheMagic, sizeof kCacheMagic);
  put_le<std::uint32_t>(out, kCacheVersion);
  put_le<std::uint64_t>(out, zeros.count());
  for (const double g : zeros.gammas()) put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(g));
  if (!out) throw Error(ErrorCode::kIo, "failed writing zero cache");
  return kCacheHeaderBytes + 8 * static_cast<std::uint64_t>(zeros.count());
}

ZeroSet load_cache(std::istream& in, std::string source) {
  std::array<unsigned char, kCacheHeaderBytes> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() >= 4 && std::memcmp(header.data(), kCacheMagic, 4) != 0)
    throw Error(ErrorCode::kBadMagic, "not a zero cache (bad magic bytes)");
  if (static_cast<std::size_t>(in.gcount()) < header.size())
    throw Error(ErrorCode::kTruncated, "zero cache header truncated");
  const auto version = get_le<std::uint32_t>(header.data() + 4);
  if (version != kCacheVersion)
    throw Error(ErrorCode::kVersionMismatch, "zero cache version " + std::to_string(version) + ", expected " +
                                                 std::to_string(kCacheVersion));
  const auto count = get_le<std::uint64_t>(header.data() + 8);

  std::vector<double> gammas;
  constexpr std::size_t kBlock = 1 << 16;
  std::vector<unsigned char> buffer(8 * kBlock);
  for (std::uint64_t done = 0; done < count;) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, count - done));
    in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(8 * n));
    if (static_cast<std::size_t>(in.gcount()) != 8 * n)
      throw Error(ErrorCode::kTruncated, "zero cache payload truncated after " +
                                             std::to_string(done + static_cast<std::uint64_t>(in.gcount()) / 8) +
                                             " of " + std::to_string(count) + " values");
    if (gammas.empty()) gammas.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1ULL << 28)));
    for (std::size_t i = 0; i < n; ++i) gammas.push_back(std::bit_cast<double>(get_le<std::uint64_t>(&buffer[8 * i])));
    done += n;
  }
  return ZeroSet(std::move(gammas), std::move(source));
}

ZeroSet load_zeros_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  const bool is_cache = in.gcount() == 4 && std::memcmp(magic, kCacheMagic, 4) == 0;
  in.clear();
  in.seekg(0);
  return is_cache ? load_cache(in, path.filename().string()) : parse_zeros(in, path.filename().string());
}

double n_asymptotic(double T) {
  if (!(T > 1.0)) throw Error(ErrorCode::kDomain, "n_asymptotic requires T > 1");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  return T / kTwoPi * (std::log(T / kTwoPi) - 1.0) + 0.875;
}

}  // namespace zfp
