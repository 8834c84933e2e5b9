#include "zfp/diophantine.hpp"

#include <cmath>
#include <numbers>

#include "zfp/error.hpp"

namespace zfp {
namespace {

long bits(const mpz_class& v) { return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

void push_convergent(ContinuedFraction& cf, const mpz_class& a) {
  const std::size_t n = cf.quotients.size();
  const mpz_class p1 = n >= 1 ? cf.p[n - 1] : mpz_class(1);
  const mpz_class q1 = n >= 1 ? cf.q[n - 1] : mpz_class(0);
  const mpz_class p2 = n >= 2 ? cf.p[n - 2] : (n == 1 ? mpz_class(1) : mpz_class(0));
  const mpz_class q2 = n >= 2 ? cf.q[n - 2] : (n == 1 ? mpz_class(0) : mpz_class(1));
  cf.quotients.push_back(a);
  cf.p.push_back(a * p1 + p2);
  cf.q.push_back(a * q1 + q2);
}

BigFloat min_of(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

std::vector<std::string> decimal_strings(const std::vector<mpz_class>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kChecked:
      return "checked";
    case CheckStatus::kPrecisionLimited:
      return "precision-limited";
    case CheckStatus::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

}  // namespace

ContinuedFraction continued_fraction(const BigFloat& xi, int max_terms) {
  if (xi.sign() <= 0 || !mpfr_number_p(xi.get())) throw Error(ErrorCode::kDomain, "xi must be a positive real");
  if (xi.precision() < defaults::kPrecisionBits)
    throw Error(ErrorCode::kInvalidArgument, "xi needs at least " + std::to_string(defaults::kPrecisionBits) + " bits");
  if (max_terms < 1 || max_terms > defaults::kCfMaxTerms)
    throw Error(ErrorCode::kInvalidArgument, "max_terms must be in [1, " + std::to_string(defaults::kCfMaxTerms) + "]");

  ContinuedFraction cf;
  cf.xi = xi;
  mpq_class r = xi.to_rational();
  const long xi_bits = bits(mpz_class(r.get_num() / r.get_den() + 1));
  const long prec = xi.precision();

  while (static_cast<int>(cf.size()) < max_terms) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!cf.quotients.empty()) {
      // |xi - p_n/q_n| ~ 1/(q_n^2 a_{n+1}) must stay well above the input rounding
      const long margin = prec - xi_bits - 2 * bits(cf.q.back()) - bits(mpz_class(a + 1));
      if (margin < defaults::kCfGuardBits) {
        cf.truncated = true;
        break;
      }
    }
    push_convergent(cf, a);
    r -= a;
    if (r == 0) {
      cf.terminated = true;
      break;
    }
    r = 1 / r;
  }
  return cf;
}

ContinuedFraction continued_fraction_from_quotients(std::span<const mpz_class> quotients, int precision_bits) {
  if (quotients.empty()) throw Error(ErrorCode::kInvalidArgument, "empty quotient list");
  if (quotients.front() < 0) throw Error(ErrorCode::kDomain, "a_0 must be non-negative");
  ContinuedFraction cf;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (i > 0 && quotients[i] < 1) throw Error(ErrorCode::kDomain, "partial quotients a_n, n >= 1, must be positive");
    push_convergent(cf, quotients[i]);
  }
  cf.terminated = true;
  cf.xi = BigFloat::from_rational(mpq_class(cf.p.back(), cf.q.back()), precision_bits);
  return cf;
}

bool recurrences_hold(const ContinuedFraction& cf) {
  mpz_class p_prev2 = 0, q_prev2 = 1, p_prev = 1, q_prev = 0;
  for (std::size_t n = 0; n < cf.size(); ++n) {
    if (cf.p[n] != cf.quotients[n] * p_prev + p_prev2 || cf.q[n] != cf.quotients[n] * q_prev + q_prev2) return false;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = cf.p[n];
    q_prev = cf.q[n];
  }
  return true;
}

bool determinants_hold(const ContinuedFraction& cf) {
  for (std::size_t n = 0; n + 1 < cf.size(); ++n) {
    const mpz_class d = cf.p[n + 1] * cf.q[n] - cf.p[n] * cf.q[n + 1];
    if (d != (n % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

bool denominators_increasing(const ContinuedFraction& cf) {
  for (std::size_t n = 1; n + 1 < cf.size(); ++n)
    if (!(cf.q[n + 1] > cf.q[n])) return false;
  return true;
}

std::vector<InequalityEntry> convergent_inequality_check(const BigFloat& alpha1, const BigFloat& alpha2,
                                                         const ContinuedFraction& cf) {
  if (alpha1.sign() <= 0 || alpha2.sign() <= 0) throw Error(ErrorCode::kDomain, "alpha coordinates must be positive");
  const int input_prec = std::min(alpha1.precision(), alpha2.precision());
  const int prec = std::max(alpha1.precision(), alpha2.precision()) + 64;
  const BigFloat a1 = alpha1.with_precision(prec);
  const BigFloat a2 = alpha2.with_precision(prec);

  std::vector<InequalityEntry> out;
  const std::size_t N = cf.size();
  for (std::size_t j = 0; j < N; ++j) {
    const bool last = j + 1 == N;
    if (last && !cf.terminated) break;
    InequalityEntry e;
    e.index = j;
    const BigFloat qj = BigFloat::from_integer(cf.q[j], prec);
    const BigFloat pj = BigFloat::from_integer(cf.p[j], prec);
    e.middle = abs(qj * a1 - pj * a2);
    if (!last) {
      const BigFloat qj1 = BigFloat::from_integer(cf.q[j + 1], prec);
      const BigFloat lower = a2 / (qj + qj1);
      const BigFloat upper = a2 / qj1;
      e.lower_holds = lower < e.middle;
      e.upper_holds = e.middle < upper;
      // rounding of the inputs propagates as (q_j alpha_1 + p_j alpha_2) 2^-prec
      BigFloat err = qj * a1 + pj * a2;
      mpfr_mul_2si(err.get(), err.get(), defaults::kCfGuardBits - input_prec, MPFR_RNDN);
      if (e.middle < err || abs(e.middle - lower) < err || abs(upper - e.middle) < err)
        e.status = CheckStatus::kPrecisionLimited;
    }
    if (cf.terminated && j + 2 >= N) e.status = CheckStatus::kDegenerate;
    out.push_back(std::move(e));
  }
  return out;
}

Membership u_alpha_membership(const ContinuedFraction& cf, double T, double epsilon, double B) {
  if (!(T > 0.0)) throw Error(ErrorCode::kDomain, "T must be positive");
  if (!(epsilon > 0.0) || !(B - epsilon > epsilon)) throw Error(ErrorCode::kInvalidArgument, "need 0 < eps < B - eps");
  const double log_t = std::log(T);
  for (std::size_t n = 1; n < cf.size(); ++n) {
    const double log_q = std::log(cf.q[n].get_d());
    if ((1.0 + epsilon) * log_q > log_t) continue;
    const double upper_exponent = std::exp((B - epsilon) * log_q);  // q^{B-eps}
    if (upper_exponent > defaults::kExpOverflowExponent || log_t <= upper_exponent) return {true, n};
  }
  return {};
}

EFPartition classify_ef(const AlphaVector& alpha, int J, double C) {
  if (alpha.size() != 2) throw Error(ErrorCode::kDimension, "E/F classification needs n = 2");
  if (J < 1 || J > 50) throw Error(ErrorCode::kInvalidArgument, "J must be in [1, 50]");
  if (!(C > 0.0)) throw Error(ErrorCode::kInvalidArgument, "C must be positive");
  const int prec = alpha.precision();
  const BigFloat& a1 = alpha[0];
  const BigFloat& a2 = alpha[1];
  BigFloat cap(1L, prec);
  cap /= BigFloat::pi(prec) * 4L;
  std::vector<BigFloat> c_weight;  // C e^{-k}
  for (int k = 0; k <= J; ++k) c_weight.push_back(BigFloat(C, prec) * exp(BigFloat(static_cast<long>(-k), prec)));

  EFPartition out;
  for (std::int64_t m = -J; m <= J; ++m) {
    for (std::int64_t l = -J; l <= J; ++l) {
      if (m == 0 && l == 0) continue;
      const BigFloat x = a1 * m + a2 * l;
      if (x.sign() <= 0) continue;
      if (m <= 0) {
        out.E.push_back({m, l});
        continue;
      }
      const auto k = std::max(m < 0 ? -m : m, l < 0 ? -l : l);
      const BigFloat threshold = min_of(min_of(c_weight[k], a2 / BigFloat(static_cast<long>(2 * m), prec)), cap);
      (x <= threshold ? out.F : out.E).push_back({m, l});
    }
  }
  return out;
}

ConditionReport linear_form_condition(std::span<const BigFloat> alpha, double C, int J, double mu) {
  const std::size_t n = alpha.size();
  if (n == 0) throw Error(ErrorCode::kDimension, "empty alpha");
  if (J < 1) throw Error(ErrorCode::kInvalidArgument, "J must be >= 1");
  if (!(C > 0.0) || !(mu > 0.0)) throw Error(ErrorCode::kInvalidArgument, "C and mu must be positive");
  double box = 1.0;
  for (std::size_t i = 0; i < n; ++i) box *= 2.0 * J + 1.0;
  if (box > 2e7) throw Error(ErrorCode::kInvalidArgument, "scan box (2J+1)^n exceeds 2e7 points");

  int prec = defaults::kPrecisionBits;
  for (const auto& a : alpha) prec = std::max(prec, a.precision());
  std::vector<BigFloat> e_weight, p_weight;
  for (int k = 0; k <= J; ++k) {
    e_weight.push_back(exp(BigFloat(static_cast<long>(k), prec)));
    p_weight.push_back(exp(log(BigFloat(static_cast<long>(k + 1), prec)) * BigFloat(mu, prec)));
  }

  ConditionReport r;
  r.J = J;
  r.C = C;
  r.mu = mu;
  bool first = true;
  std::vector<std::int64_t> m(n, -J);
  for (;;) {
    std::size_t lead = 0;
    while (lead < n && m[lead] == 0) ++lead;
    if (lead < n && m[lead] > 0) {
      std::int64_t k = 0;
      for (const auto v : m) k = std::max(k, v < 0 ? -v : v);
      const BigFloat v = abs(dot(m, alpha));
      if (v.is_zero()) r.exact_dependence = true;
      BigFloat we = v * e_weight[k];
      BigFloat wp = v * p_weight[k];
      if (first || we < r.min_exp_weighted) {
        r.min_exp_weighted = std::move(we);
        r.argmin_exp = m;
      }
      if (first || wp < r.min_poly_weighted) {
        r.min_poly_weighted = std::move(wp);
        r.argmin_poly = m;
      }
      first = false;
    }
    std::size_t i = n;
    while (i > 0 && m[i - 1] == J) m[--i] = -J;
    if (i == 0) break;
    ++m[i - 1];
  }
  r.holds = !r.exact_dependence && r.min_exp_weighted > BigFloat(C, prec);
  return r;
}

void DiophantineConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (!(C > 0.0)) fail("C must be positive");
  if (!(epsilon > 0.0)) fail("epsilon must be positive");
  if (!(B > 4.0)) fail("B must exceed 4");
  if (!(epsilon < B - epsilon)) fail("epsilon must be below B - epsilon");
  if (J < 1) fail("J must be a positive integer");
  if (!(mu > 0.0)) fail("mu must be positive");
}

nlohmann::json to_json(const ContinuedFraction& cf) {
  return {{"xi", cf.xi.to_decimal(40)},
          {"quotients", decimal_strings(cf.quotients)},
          {"p", decimal_strings(cf.p)},
          {"q", decimal_strings(cf.q)},
          {"terminated", cf.terminated},
          {"truncated", cf.truncated}};
}

nlohmann::json to_json(std::span<const InequalityEntry> entries) {
  auto out = nlohmann::json::array();
  for (const auto& e : entries)
    out.push_back({{"index", e.index},
                   {"status", status_name(e.status)},
                   {"lower_holds", e.lower_holds},
                   {"upper_holds", e.upper_holds},
                   {"middle", e.middle.to_decimal(20)}});
  return out;
}

nlohmann::json to_json(const ConditionReport& r) {
  return {{"J", r.J},
          {"C", r.C},
          {"mu", r.mu},
          {"min_exp_weighted", r.min_exp_weighted.to_decimal(20)},
          {"argmin_exp", r.argmin_exp},
          {"holds", r.holds},
          {"exact_dependence", r.exact_dependence},
          {"min_poly_weighted", r.min_poly_weighted.to_decimal(20)},
          {"argmin_poly", r.argmin_poly}};
}

nlohmann::json to_json(const EFPartition& partition) {
  return {{"E", partition.E}, {"F", partition.F}};
}

}  // namespace zfp
