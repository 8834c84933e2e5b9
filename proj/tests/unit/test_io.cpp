#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "zfp/error.hpp"
#include "zfp/format.hpp"
#include "zfp/grid.hpp"
#include "zfp/io.hpp"

using nlohmann::json;
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

zfp::Grid2D sample_grid(int R) {
  zfp::Grid2D g(R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) g.at(i, j) = std::sin(0.37 * i + 1.1 * j) / 3.0 + 1e-17 * i;
  return g;
}

}  // namespace

TEST_CASE("grid csv round trip is exact") {
  auto g = sample_grid(13);
  g.metadata()["statistic"] = "test";
  g.metadata()["T"] = 123.5;
  std::stringstream buf;
  zfp::write_grid_csv(g, buf);
  const auto back = zfp::read_grid_csv(buf);
  CHECK(back.resolution() == 13);
  CHECK(std::equal(g.values().begin(), g.values().end(), back.values().begin()));
  CHECK(back.metadata() == g.metadata());
}

TEST_CASE("grid csv rejects ragged input") {
  std::istringstream ragged("1,2\n3\n");
  CHECK(code_of([&] { zfp::read_grid_csv(ragged); }) == ErrorCode::kParse);
  std::istringstream junk("1,x\n3,4\n");
  CHECK(code_of([&] { zfp::read_grid_csv(junk); }) == ErrorCode::kParse);
}

TEST_CASE("grid basics") {
  zfp::Grid2D g(2);
  g.at(0, 0) = 1;
  g.at(0, 1) = 2;
  g.at(1, 0) = 3;
  g.at(1, 1) = 4;
  CHECK(g.mean() == 2.5);
  CHECK(g.min() == 1);
  CHECK(g.max() == 4);
  const auto t = g.transposed();
  CHECK(t.at(0, 1) == 3);
  CHECK(t.at(1, 0) == 2);
  CHECK(g.cell_width() == 0.5);
  CHECK(code_of([] { zfp::Grid2D bad(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("pearson correlation") {
  const std::vector<double> a{1, 2, 3, 4}, b{2, 4, 6, 8}, c{4, 3, 2, 1}, flat{1, 1, 1, 1};
  CHECK(zfp::pearson_correlation(a, b) == doctest::Approx(1.0));
  CHECK(zfp::pearson_correlation(a, c) == doctest::Approx(-1.0));
  CHECK(zfp::pearson_correlation(a, flat) == 0.0);
}

TEST_CASE("shortest formatting round trips") {
  for (const double v : {0.1, 1.0 / 3, -2.5e-300, 1e21, 123456789.125}) CHECK(std::stod(zfp::format_shortest(v)) == v);
  CHECK(zfp::format_shortest(0.1) == "0.1");
}

TEST_CASE("pgm output") {
  zfp::Grid2D g(2);
  g.at(0, 0) = -1;
  g.at(0, 1) = 0;
  g.at(1, 0) = 0.5;
  g.at(1, 1) = 1;
  std::ostringstream out;
  zfp::write_pgm(g, out);
  const std::string expected = std::string("P5\n2 2\n255\n") + '\x00' + '\x80' + '\xBF' + '\xFF';
  CHECK(out.str() == expected);
}

TEST_CASE("constant grid renders mid gray") {
  zfp::Grid2D g(3);
  std::ostringstream out;
  zfp::write_pgm(g, out);
  const auto s = out.str();
  REQUIRE(s.size() == std::string("P5\n3 3\n255\n").size() + 9);
  for (std::size_t i = s.size() - 9; i < s.size(); ++i) CHECK(static_cast<unsigned char>(s[i]) == 128);
}

TEST_CASE("diverging ppm") {
  zfp::Grid2D g(2);
  g.at(0, 0) = -2;
  g.at(0, 1) = 0;
  g.at(1, 0) = 1;
  g.at(1, 1) = 2;
  std::ostringstream out;
  zfp::write_ppm_diverging(g, out);
  const auto s = out.str();
  const std::string header = "P6\n2 2\n255\n";
  REQUIRE(s.size() == header.size() + 12);
  auto px = [&](int k) {
    const auto o = header.size() + 3 * k;
    return std::array<int, 3>{static_cast<unsigned char>(s[o]), static_cast<unsigned char>(s[o + 1]),
                              static_cast<unsigned char>(s[o + 2])};
  };
  CHECK(px(0) == std::array<int, 3>{0, 0, 255});
  CHECK(px(1) == std::array<int, 3>{255, 255, 255});
  CHECK(px(2) == std::array<int, 3>{255, 128, 128});
  CHECK(px(3) == std::array<int, 3>{255, 0, 0});
  const auto side = zfp::heatmap_sidecar(g, true);
  CHECK(side.at("v_min") == -2.0);
  CHECK(side.at("v_max") == 2.0);
  CHECK(side.at("mode") == "diverging");
}

TEST_CASE("relation system json") {
  const auto j = json::parse(R"({"n": 2, "rows": [{"b": [1, 1], "a": 1, "q": 1, "p": 2},
                                                   {"b": [1, -1], "a": 1, "q": 2, "p": 3}]})");
  const auto s = zfp::relation_system_from_json(j);
  CHECK(s == fixtures::example1());
  CHECK(zfp::relation_system_from_json(zfp::to_json(s)) == s);
  CHECK(zfp::relation_system_from_json(json::parse(R"({"n": 2, "rows": []})")).rank() == 0);
  CHECK(code_of([] { zfp::relation_system_from_json(json::parse(R"({"rows": []})")); }) == ErrorCode::kParse);
  CHECK(code_of([] {
          zfp::relation_system_from_json(json::parse(R"({"n": 2, "rows": [{"b": [1, 1], "a": 1, "q": 1}]})"));
        }) == ErrorCode::kParse);
  CHECK(code_of([] {
          zfp::relation_system_from_json(json::parse(R"({"n": 2, "rows": [{"b": [1, 1], "a": 1, "q": 1, "p": 4}]})"));
        }) == ErrorCode::kNotPrime);
  CHECK(code_of([] {
          zfp::relation_system_from_json(json::parse(R"({"n": 2, "rows": [{"b": [1, 1], "a": 1, "q": 1, "p": -2}]})"));
        }) == ErrorCode::kNotPrime);
  CHECK(code_of([] {
          zfp::relation_system_from_json(
              json::parse(R"({"n": 2, "rows": [{"b": [1, 1], "a": 1, "q": 1, "p": 2}, {"b": [2, 4], "a": 1, "q": 1, "p": 3}]})"));
        }) == ErrorCode::kRowGcd);
}

TEST_CASE("alpha json") {
  const auto a = zfp::alpha_from_json(json::parse(R"({"decimal": ["0.25", "0.125"]})"), 160);
  CHECK(a.rounded() == std::vector<double>{0.25, 0.125});
  const auto e = zfp::alpha_from_json(
      json::parse(R"({"exact": [[{"num": 1, "den": 2, "p": 2}, {"num": 1, "den": 4, "p": 3}],
                                [{"num": 1, "den": 2, "p": 2}, {"num": -1, "den": 4, "p": 3}]]})"),
      256);
  const auto solved = zfp::solve_alpha(fixtures::example1(), 256);
  CHECK(abs(e[0] - solved[0]).to_double() < 1e-70);
  CHECK(abs(e[1] - solved[1]).to_double() < 1e-70);
  const auto round = zfp::alpha_from_json(zfp::to_json(a), 160);
  CHECK(round.rounded() == a.rounded());
  CHECK(code_of([] { zfp::alpha_from_json(json::parse(R"({})"), 160); }) == ErrorCode::kParse);
  CHECK(code_of([] {
          zfp::alpha_from_json(json::parse(R"({"decimal": ["0.1", "0.2"], "exact": []})"), 160);
        }) == ErrorCode::kParse);
}

TEST_CASE("test function json") {
  const auto h = zfp::test_function_from_json(json::parse(R"([{"m": [1, 1], "re": 0.5}])"), 2);
  CHECK(h.coefficient({-1, -1}) == std::complex<double>(0.5, 0));
  const auto h2 = zfp::test_function_from_json(
      json::parse(R"({"terms": [{"m": [0, 0], "re": 1}, {"m": [2, 1], "re": 0.1, "im": 0.2}], "decay_b": 5, "decay_c": 2})"), 2);
  CHECK(h2.decay_b() == 5);
  CHECK(h2.decay_c() == 2);
  CHECK(h2.coefficient({-2, -1}) == std::complex<double>(0.1, -0.2));
  CHECK(code_of([] {
          zfp::test_function_from_json(json::parse(R"([{"m": [1, 1], "re": 0.5}, {"m": [-1, -1], "re": 0.4}])"), 2);
        }) == ErrorCode::kInvalidTestFunction);
  CHECK(code_of([] { zfp::test_function_from_json(json::parse(R"([{"re": 0.5}])"), 2); }) == ErrorCode::kParse);
  CHECK(code_of([] { zfp::test_function_from_json(json::parse(R"("x")"), 2); }) == ErrorCode::kParse);
}

TEST_CASE("read_json reports parse errors") {
  std::istringstream bad("{\"n\": ");
  CHECK(code_of([&] { zfp::read_json(bad, "relations"); }) == ErrorCode::kParse);
  std::istringstream good("[1, 2]");
  CHECK(zfp::read_json(good, "x").size() == 2);
}
