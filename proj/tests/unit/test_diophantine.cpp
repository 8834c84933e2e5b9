#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "zfp/diophantine.hpp"
#include "zfp/error.hpp"

using zfp::BigFloat;
using zfp::CheckStatus;
using zfp::ErrorCode;
using zfp::IntPair;

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

BigFloat golden(int prec) {
  BigFloat g = sqrt(BigFloat(5L, prec)) + BigFloat(1L, prec);
  return g / BigFloat(2L, prec);
}

BigFloat example1_ratio(int prec) {
  const auto a = zfp::solve_alpha(fixtures::example1(), prec);
  return a[0] / a[1];
}

std::set<IntPair> convergent_pairs(const zfp::ContinuedFraction& cf) {
  std::set<IntPair> out;
  for (std::size_t n = 0; n < cf.size(); ++n)
    if (cf.q[n].fits_slong_p() && cf.p[n].fits_slong_p()) out.insert({cf.q[n].get_si(), -cf.p[n].get_si()});
  return out;
}

IntPair reduced(IntPair v) {
  const auto g = std::gcd(v[0], v[1]);
  return {v[0] / g, v[1] / g};
}

zfp::AlphaVector alpha_of(const std::string& a1, const std::string& a2) {
  const std::vector<std::string> d{a1, a2};
  return zfp::AlphaVector::from_decimal(d, 256);
}

}  // namespace

TEST_CASE("continued fraction of 3/2") {
  const auto cf = zfp::continued_fraction(BigFloat(1.5, 160));
  CHECK(cf.quotients == std::vector<mpz_class>{1, 2});
  CHECK(cf.p == std::vector<mpz_class>{1, 3});
  CHECK(cf.q == std::vector<mpz_class>{1, 2});
  CHECK(cf.terminated);
  CHECK_FALSE(cf.truncated);
}

TEST_CASE("continued fraction of example 1's ratio") {
  const BigFloat xi = example1_ratio(256);
  CHECK(xi.to_double() == doctest::Approx(8.63768).epsilon(1e-6));
  const auto cf = zfp::continued_fraction(xi);
  REQUIRE(cf.size() >= 30);
  CHECK(cf.quotients[0] == 8);
  CHECK_FALSE(cf.terminated);
  // direct division for the first quotients
  BigFloat r = xi;
  for (std::size_t n = 0; n < 10; ++n) {
    const double a = std::floor(r.to_double());
    CHECK(cf.quotients[n] == static_cast<long>(a));
    r = BigFloat(1L, 256) / (r - BigFloat(a, 256));
  }
  CHECK(zfp::recurrences_hold(cf));
  CHECK(zfp::determinants_hold(cf));
  CHECK(zfp::denominators_increasing(cf));
}

TEST_CASE("golden ratio gives Fibonacci convergents") {
  const auto cf = zfp::continued_fraction(golden(256));
  REQUIRE(cf.size() == 60);
  for (const auto& a : cf.quotients) CHECK(a == 1);
  mpz_class f0 = 1, f1 = 1;  // q_n = F_{n+1}, p_n = F_{n+2}
  for (std::size_t n = 0; n < cf.size(); ++n) {
    CHECK(cf.q[n] == f0);
    CHECK(cf.p[n] == f1);
    const mpz_class next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  CHECK(zfp::recurrences_hold(cf));
  CHECK(zfp::determinants_hold(cf));
}

TEST_CASE("precision guard truncates with a flag") {
  // q_n of sqrt 2 grows like 2^{1.27 n}, exhausting 160 bits before 60 terms
  const auto cf = zfp::continued_fraction(sqrt(BigFloat(2L, 160)), 60);
  CHECK(cf.truncated);
  CHECK(cf.size() < 60);
  CHECK(cf.size() >= 30);
  CHECK(zfp::determinants_hold(cf));
  CHECK_FALSE(zfp::continued_fraction(golden(160), 60).truncated);
  const auto full = zfp::continued_fraction(sqrt(BigFloat(2L, 1024)), 60);
  CHECK_FALSE(full.truncated);
  for (std::size_t n = 0; n < cf.size(); ++n) CHECK(cf.quotients[n] == full.quotients[n]);
}

TEST_CASE("continued fraction argument checks") {
  CHECK(code_of([] { zfp::continued_fraction(BigFloat(1.5, 64)); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { zfp::continued_fraction(BigFloat(1.5, 160), 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { zfp::continued_fraction(BigFloat(1.5, 160), 61); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { zfp::continued_fraction(BigFloat(-1.5, 160)); }) == ErrorCode::kDomain);
  CHECK(code_of([] { zfp::continued_fraction(BigFloat(0.0, 160)); }) == ErrorCode::kDomain);
}

TEST_CASE("final convergent approximates xi within 1/q^2") {
  for (const auto& xi : {example1_ratio(512), golden(512), sqrt(BigFloat(2L, 512))}) {
    const auto cf = zfp::continued_fraction(xi);
    const auto n = cf.size() - 1;
    const BigFloat approx = BigFloat::from_rational(mpq_class(cf.p[n], cf.q[n]), 512);
    const BigFloat bound = BigFloat(1L, 512) / BigFloat::from_integer(cf.q[n] * cf.q[n], 512);
    CHECK(abs(xi - approx) < bound);
  }
}

TEST_CASE("identities hold for built-from-quotient expansions") {
  const std::vector<mpz_class> qs{3, 7, 15, 1, 292, 1, 1, 1, 2};
  const auto cf = zfp::continued_fraction_from_quotients(qs, 256);
  CHECK(cf.p.back() == 833719);
  CHECK(cf.q.back() == 265381);
  CHECK(cf.p[4] == 103993);
  CHECK(cf.q[4] == 33102);
  CHECK(zfp::recurrences_hold(cf));
  CHECK(zfp::determinants_hold(cf));
  auto broken = cf;
  broken.p[4] += 1;
  CHECK_FALSE(zfp::recurrences_hold(broken));
  CHECK_FALSE(zfp::determinants_hold(broken));
  const std::vector<mpz_class> bad{1, 0};
  CHECK(code_of([&] { zfp::continued_fraction_from_quotients(bad, 256); }) == ErrorCode::kDomain);
}

TEST_CASE("convergent inequality for example 1") {
  const auto alpha = zfp::solve_alpha(fixtures::example1(), 256);
  const auto cf = zfp::continued_fraction(alpha[0] / alpha[1]);
  const auto entries = zfp::convergent_inequality_check(alpha[0], alpha[1], cf);
  REQUIRE(entries.size() >= 20);
  for (std::size_t j = 0; j < 20; ++j) {
    CAPTURE(j);
    CHECK(entries[j].status == CheckStatus::kChecked);
    CHECK(entries[j].lower_holds);
    CHECK(entries[j].upper_holds);
  }
  for (const auto& e : entries)
    if (e.status == CheckStatus::kChecked) CHECK((e.lower_holds && e.upper_holds));
}

TEST_CASE("convergent inequality for the golden pair") {
  const BigFloat phi = golden(512);
  const auto cf = zfp::continued_fraction(phi);
  const auto entries = zfp::convergent_inequality_check(phi, BigFloat(1L, 512), cf);
  REQUIRE(entries.size() >= 30);
  for (std::size_t j = 0; j < 30; ++j) {
    CAPTURE(j);
    CHECK(entries[j].status == CheckStatus::kChecked);
    CHECK(entries[j].lower_holds);
    CHECK(entries[j].upper_holds);
  }
}

TEST_CASE("rational ratio is flagged as degenerate") {
  const BigFloat a1(1.5, 256), a2(1.0, 256);
  const auto cf = zfp::continued_fraction(a1 / a2);
  REQUIRE(cf.terminated);
  const auto entries = zfp::convergent_inequality_check(a1, a2, cf);
  REQUIRE(entries.size() == cf.size());
  CHECK(entries.back().status == CheckStatus::kDegenerate);
  CHECK(entries.back().middle.is_zero());
  CHECK(entries[entries.size() - 2].status == CheckStatus::kDegenerate);
}

TEST_CASE("low-precision inputs mark precision-limited indices") {
  const auto alpha = zfp::solve_alpha(fixtures::example1(), 160);
  const auto cf = zfp::continued_fraction(alpha[0] / alpha[1]);
  const auto entries = zfp::convergent_inequality_check(alpha[0], alpha[1], cf);
  REQUIRE_FALSE(entries.empty());
  CHECK(entries.front().status == CheckStatus::kChecked);
  for (const auto& e : entries)
    if (e.status == CheckStatus::kChecked) CHECK((e.lower_holds && e.upper_holds));
}

TEST_CASE("U_alpha membership") {
  const std::vector<mpz_class> qs{0, 10, 3};
  const auto cf = zfp::continued_fraction_from_quotients(qs, 256);
  REQUIRE(cf.q[1] == 10);
  const auto m = zfp::u_alpha_membership(cf, 100.0, 0.5, 6.0);
  CHECK(m.member);
  CHECK(m.witness == std::optional<std::size_t>(1));

  const auto small = zfp::u_alpha_membership(cf, 2.0, 0.5, 6.0);
  CHECK_FALSE(small.member);
  CHECK_FALSE(small.witness.has_value());

  CHECK(code_of([&] { zfp::u_alpha_membership(cf, 100.0, 3.0, 5.0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { zfp::u_alpha_membership(cf, 0.0, 0.5, 6.0); }) == ErrorCode::kDomain);
}

TEST_CASE("U_alpha membership regression for example 1") {
  const auto cf = zfp::continued_fraction(example1_ratio(256));
  const auto m = zfp::u_alpha_membership(cf, 42653549.761, 0.1, 5.0);
  CHECK(m.member);
  // q_1 = 1 fails the upper endpoint e^1; q_2 = 2 gives [2^1.1, e^{2^4.9}]
  CHECK(m.witness == std::optional<std::size_t>(2));
  CHECK(cf.q[1] == 1);
  CHECK(cf.q[2] == 2);
}

TEST_CASE("E/F split for the golden ratio") {
  const BigFloat phi = golden(256);
  const BigFloat a2 = BigFloat(0.1, 256);
  const auto alpha = zfp::AlphaVector::from_values({phi * a2, a2});
  const auto ef = zfp::classify_ef(alpha, 20, 1e-3);
  CHECK(ef.F.empty());
}

TEST_CASE("E/F is a partition of the positive side") {
  const auto alpha = zfp::solve_alpha(fixtures::example1(), 256);
  const int J = 12;
  const auto ef = zfp::classify_ef(alpha, J, 1.0);
  std::set<IntPair> e(ef.E.begin(), ef.E.end()), f(ef.F.begin(), ef.F.end());
  CHECK(e.size() == ef.E.size());
  CHECK(f.size() == ef.F.size());
  for (const auto& v : f) CHECK(e.count(v) == 0);
  std::size_t positive = 0;
  for (std::int64_t m = -J; m <= J; ++m)
    for (std::int64_t l = -J; l <= J; ++l)
      if ((m || l) && (alpha[0] * m + alpha[1] * l).sign() > 0) {
        ++positive;
        CHECK(e.count({m, l}) + f.count({m, l}) == 1);
      }
  CHECK(positive == e.size() + f.size());
  CHECK(positive == (static_cast<std::size_t>(2 * J + 1) * (2 * J + 1) - 1) / 2);
}

TEST_CASE("F members reduce to convergent pairs") {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> ratio(1.0, 20.0), second(0.02, 0.5);
  std::size_t nonempty = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const BigFloat a2(second(gen), 256);
    const BigFloat a1 = a2 * BigFloat(ratio(gen), 256);
    const auto alpha = zfp::AlphaVector::from_values({a1, a2});
    const auto ef = zfp::classify_ef(alpha, 20, 10.0);
    const auto pairs = convergent_pairs(zfp::continued_fraction(a1 / a2));
    if (!ef.F.empty()) ++nonempty;
    for (const auto& v : ef.F) {
      CAPTURE(trial);
      CHECK(pairs.count(reduced(v)) == 1);
    }
  }
  CHECK(nonempty > 0);
}

TEST_CASE("F can contain non-primitive multiples of a convergent pair") {
  // xi = 3 + 1e-6: (1, -3) and (2, -6) both sit below the threshold
  const auto alpha = alpha_of("0.3000001", "0.1");
  const auto ef = zfp::classify_ef(alpha, 8, 1.0);
  const std::set<IntPair> f(ef.F.begin(), ef.F.end());
  const auto pairs = convergent_pairs(zfp::continued_fraction(alpha[0] / alpha[1]));
  CHECK(f.count({1, -3}) == 1);
  CHECK(pairs.count({1, -3}) == 1);
  CHECK(f.count({2, -6}) == 1);
  CHECK(pairs.count({2, -6}) == 0);
}

TEST_CASE("F grows monotonically with C") {
  const auto alpha = zfp::solve_alpha(fixtures::example2(), 256);
  std::set<IntPair> prev;
  for (const double C : {1e-6, 1e-3, 1e-1, 1.0, 10.0, 1e3, 1e6}) {
    const auto ef = zfp::classify_ef(alpha, 15, C);
    const std::set<IntPair> f(ef.F.begin(), ef.F.end());
    CHECK(std::includes(f.begin(), f.end(), prev.begin(), prev.end()));
    prev = f;
  }
}

TEST_CASE("classify argument checks") {
  const auto alpha = zfp::solve_alpha(fixtures::example2(), 256);
  CHECK(code_of([&] { zfp::classify_ef(alpha, 51, 1.0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { zfp::classify_ef(alpha, 0, 1.0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { zfp::classify_ef(alpha, 5, 0.0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("condition scan detects exact dependence") {
  const std::vector<BigFloat> a{BigFloat(1L, 160), BigFloat(1L, 160)};
  const auto r = zfp::linear_form_condition(a, 1e-6, 5);
  CHECK_FALSE(r.holds);
  CHECK(r.exact_dependence);
  CHECK(r.min_exp_weighted.is_zero());
  CHECK(r.argmin_exp == std::vector<std::int64_t>{1, -1});
}

TEST_CASE("condition holds for example 2") {
  const auto alpha = zfp::solve_alpha(fixtures::example2(), 256);
  const auto r = zfp::linear_form_condition(alpha.values(), 1e-6, 15);
  CHECK(r.holds);
  CHECK_FALSE(r.exact_dependence);
  CHECK(r.min_exp_weighted.to_double() > 1e-6);
  CHECK(r.min_poly_weighted.sign() > 0);
  CHECK(r.argmin_exp.size() == 2);
  // brute-force minimum in double precision
  double best = 1e300;
  for (int m = -15; m <= 15; ++m)
    for (int l = -15; l <= 15; ++l)
      if (m || l)
        best = std::min(best, std::abs(m * alpha[0].to_double() + l * alpha[1].to_double()) *
                                  std::exp(std::max(std::abs(m), std::abs(l))));
  CHECK(r.min_exp_weighted.to_double() == doctest::Approx(best).epsilon(1e-9));
  CHECK(zfp::to_json(r).contains("min_exp_weighted"));
}

TEST_CASE("condition scan limits") {
  const std::vector<BigFloat> a{BigFloat(0.3, 160), BigFloat(0.7, 160)};
  CHECK(code_of([&] { zfp::linear_form_condition(a, 1.0, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { zfp::linear_form_condition(a, 1.0, 10000); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { zfp::linear_form_condition(a, -1.0, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("config validation") {
  zfp::DiophantineConfig c;
  CHECK_NOTHROW(c.validate());
  c.B = 4.0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidArgument);
  c = {};
  c.epsilon = 3.0;
  c.B = 5.0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidArgument);
  c = {};
  c.J = 0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidArgument);
  c = {};
  c.C = 0.0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("json output is exact") {
  const auto cf = zfp::continued_fraction(golden(256), 10);
  const auto j = zfp::to_json(cf);
  CHECK(j.at("quotients").size() == 10);
  CHECK(j.at("q").back() == "55");
}
