#include <bit>
#include <cstring>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "zfp/error.hpp"
#include "zfp/zeros.hpp"

using zfp::ErrorCode;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const zfp::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const zfp::Error& e) {
    return e.what();
  }
  return {};
}

zfp::ZeroSet parse(const std::string& text) {
  std::istringstream in(text);
  return zfp::parse_zeros(in);
}

std::string cache_bytes(const zfp::ZeroSet& z) {
  std::ostringstream out;
  zfp::write_cache(z, out);
  return out.str();
}

zfp::ZeroSet from_bytes(const std::string& bytes) {
  std::istringstream in(bytes);
  return zfp::load_cache(in);
}

}  // namespace

TEST_CASE("parse two table entries") {
  const auto z = parse("14.134725142\n21.022039639\n");
  CHECK(z.count() == 2);
  CHECK(z.t_max() == 21.022039639);
  CHECK(z[0] == 14.134725142);
}

TEST_CASE("parse empty input") {
  CHECK(parse("").count() == 0);
  CHECK(parse("# header only\n\n").empty());
  CHECK(parse("").t_max() == 0.0);
}

TEST_CASE("parse skips comments and surrounding whitespace") {
  const auto z = parse("# zeros\n  14.1 \r\n\n# mid\n21.0\n25.0");
  CHECK(z.count() == 3);
  CHECK(z.t_max() == 25.0);
}

TEST_CASE("non-monotone input names the line") {
  CHECK(code_of([] { parse("21.0\n14.1\n"); }) == ErrorCode::kNonMonotone);
  CHECK(message_of([] { parse("21.0\n14.1\n"); }).find("line 2") != std::string::npos);
  CHECK(message_of([] { parse("# c\n1.0\n2.0\n2.0\n"); }).find("line 4") != std::string::npos);
}

TEST_CASE("non-numeric and non-positive tokens") {
  CHECK(code_of([] { parse("14.1\nabc\n"); }) == ErrorCode::kParse);
  CHECK(message_of([] { parse("14.1\nabc\n"); }).find("line 2") != std::string::npos);
  CHECK(code_of([] { parse("14.1 15.2\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse("-3\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse("0\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse("nan\n"); }) == ErrorCode::kParse);
}

TEST_CASE("constructor enforces ordering") {
  CHECK(code_of([] { zfp::ZeroSet({2.0, 1.0}); }) == ErrorCode::kNonMonotone);
  CHECK(code_of([] { zfp::ZeroSet({-1.0}); }) == ErrorCode::kNonMonotone);
}

TEST_CASE("empty cache is a 16-byte header") {
  const auto bytes = cache_bytes(zfp::ZeroSet{});
  CHECK(bytes.size() == 16);
  CHECK(bytes.substr(0, 4) == "ZFPZ");
  CHECK(bytes[4] == 1);
  CHECK(from_bytes(bytes).count() == 0);
}

TEST_CASE("cache layout is little endian") {
  const zfp::ZeroSet z({14.134725142});
  const auto bytes = cache_bytes(z);
  REQUIRE(bytes.size() == 24);
  std::uint64_t count = 0;
  for (int i = 7; i >= 0; --i) count = (count << 8) | static_cast<unsigned char>(bytes[8 + i]);
  CHECK(count == 1);
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | static_cast<unsigned char>(bytes[16 + i]);
  CHECK(std::bit_cast<double>(bits) == 14.134725142);
}

TEST_CASE("cache round trip is bit exact") {
  std::mt19937_64 gen(7);
  std::vector<double> g;
  double t = 10.0;
  for (int i = 0; i < 5000; ++i) {
    t += std::uniform_real_distribution<double>(1e-9, 3.0)(gen);
    g.push_back(t);
  }
  const zfp::ZeroSet z(g);
  std::ostringstream out;
  CHECK(zfp::write_cache(z, out) == 16 + 8 * 5000);
  const auto back = from_bytes(out.str());
  CHECK(back == z);
  CHECK(cache_bytes(back) == out.str());
}

TEST_CASE("cache corruption is reported distinctly") {
  const auto good = cache_bytes(zfp::ZeroSet({1.0, 2.0, 3.0}));
  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK(code_of([&] { from_bytes(bad_magic); }) == ErrorCode::kBadMagic);
  auto bad_version = good;
  bad_version[4] = 2;
  CHECK(code_of([&] { from_bytes(bad_version); }) == ErrorCode::kVersionMismatch);
  CHECK(code_of([&] { from_bytes(good.substr(0, good.size() - 3)); }) == ErrorCode::kTruncated);
  CHECK(code_of([&] { from_bytes(good.substr(0, 10)); }) == ErrorCode::kTruncated);
  CHECK(code_of([&] { from_bytes(good.substr(0, 2)); }) == ErrorCode::kTruncated);
}

TEST_CASE("count_upto") {
  const auto z = parse("14.134725142\n21.022039639\n");
  CHECK(z.count_upto(20.0) == 1);
  CHECK(z.count_upto(0.0) == 0);
  CHECK(z.count_upto(14.134725142) == 1);  // gamma == T is counted
  CHECK(z.count_upto(z.t_max()) == z.count());
  CHECK(zfp::ZeroSet{}.count_upto(100.0) == 0);
}

TEST_CASE("n_asymptotic") {
  CHECK(std::abs(zfp::n_asymptotic(42653549.761) - 1e8) <= 10.0);
  CHECK(code_of([] { zfp::n_asymptotic(1.0); }) == ErrorCode::kDomain);
  CHECK(code_of([] { zfp::n_asymptotic(-5.0); }) == ErrorCode::kDomain);
  for (double T = 11.0; T < 1e9; T *= 1.7) CHECK(zfp::n_asymptotic(2 * T) > zfp::n_asymptotic(T));
}

TEST_CASE("reference table against published ordinates") {
  const auto& z = fixtures::reference_zeros();
  REQUIRE(z.count() == 2000000);
  struct Known {
    std::size_t k;
    double gamma;
  };
  const Known known[] = {{1, 14.134725141734693790},    {2, 21.022039638771554993},
                         {100, 236.5242296658162058},   {1000, 1419.422480945995686},
                         {10000, 9877.782654005501143}, {100000, 74920.827498994186794},
                         {1000000, 600269.67701244495552}, {2000000, 1131944.4718248622685}};
  for (const auto& kz : known) {
    CAPTURE(kz.k);
    CHECK(std::abs(z[kz.k - 1] - kz.gamma) < 2e-9);
  }
}

TEST_CASE("n_asymptotic tracks the observed count") {
  const auto z = fixtures::first_zeros(100000);
  CHECK(std::abs(zfp::n_asymptotic(z.t_max()) - 1e5) <= 10.0);
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> pick(100.0, z.t_max());
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double T = pick(gen);
    worst = std::max(worst, std::abs(zfp::n_asymptotic(T) - static_cast<double>(z.count_upto(T))));
  }
  CHECK(worst <= 10.0);
}

TEST_CASE("count_upto is nondecreasing and right continuous") {
  const auto z = fixtures::first_zeros(1000);
  std::size_t prev = 0;
  for (double T = 0.0; T < z.t_max(); T += 0.37) {
    const auto c = z.count_upto(T);
    CHECK(c >= prev);
    prev = c;
  }
  for (std::size_t k = 0; k < z.count(); k += 97) {
    CHECK(z.count_upto(z[k]) == k + 1);
    CHECK(z.count_upto(std::nextafter(z[k], 0.0)) == k);
  }
}

TEST_CASE("load_zeros_file sniffs the format") {
  const auto dir = std::filesystem::temp_directory_path() / "zfp_test_zeros";
  std::filesystem::create_directories(dir);
  const zfp::ZeroSet z({14.5, 21.25, 25.125});
  {
    std::ofstream txt(dir / "z.txt");
    txt << "# t\n14.5\n21.25\n25.125\n";
    std::ofstream bin(dir / "z.zfpz", std::ios::binary);
    zfp::write_cache(z, bin);
  }
  CHECK(zfp::load_zeros_file(dir / "z.txt") == z);
  CHECK(zfp::load_zeros_file(dir / "z.zfpz") == z);
  CHECK(code_of([&] { zfp::load_zeros_file(dir / "missing"); }) == ErrorCode::kIo);
}
