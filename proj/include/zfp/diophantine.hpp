#pragma once

// Continued fractions of xi = alpha_1 / alpha_2, the convergent inequality,
// U_alpha membership, the E_J / F_J split and Diophantine condition scans.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "zfp/bigfloat.hpp"
#include "zfp/defaults.hpp"
#include "zfp/relations.hpp"

namespace zfp {

struct ContinuedFraction {
  BigFloat xi;
  std::vector<mpz_class> quotients;  // a_0; a_1, a_2, ...
  std::vector<mpz_class> p;          // convergent numerators p_0, p_1, ...
  std::vector<mpz_class> q;          // convergent denominators q_0 = 1, q_1, ...
  bool terminated = false;           // xi is exactly p.back() / q.back()
  bool truncated = false;            // stopped early: not enough precision left for the next quotient

  std::size_t size() const { return quotients.size(); }
};

// Exact expansion of the extended-precision value xi > 0 (at least 160 bits).
// At most max_terms <= 60 quotients; a quotient is accepted only while at least
// 16 bits of precision remain.
ContinuedFraction continued_fraction(const BigFloat& xi, int max_terms = defaults::kCfMaxTerms);

// Convergents of [a_0; a_1, ...]; xi is set to the last convergent.
ContinuedFraction continued_fraction_from_quotients(std::span<const mpz_class> quotients, int precision_bits);

// Exact integer checks over every computed index.
bool recurrences_hold(const ContinuedFraction& cf);
bool determinants_hold(const ContinuedFraction& cf);  // p_{n+1} q_n - p_n q_{n+1} = (-1)^n
bool denominators_increasing(const ContinuedFraction& cf);  // q_n strictly increasing for n >= 1

enum class CheckStatus { kChecked, kPrecisionLimited, kDegenerate };

struct InequalityEntry {
  std::size_t index = 0;
  CheckStatus status = CheckStatus::kChecked;
  bool lower_holds = false;  // alpha_2 / (q_j + q_{j+1}) < |q_j alpha_1 - p_j alpha_2|
  bool upper_holds = false;  // |q_j alpha_1 - p_j alpha_2| < alpha_2 / q_{j+1}
  BigFloat middle;
};

// One entry per index j with j + 1 computed; a terminated expansion adds a
// degenerate entry for its last index.
std::vector<InequalityEntry> convergent_inequality_check(const BigFloat& alpha1, const BigFloat& alpha2,
                                                         const ContinuedFraction& cf);

struct Membership {
  bool member = false;
  std::optional<std::size_t> witness;  // smallest n >= 1 with q_n^{1+eps} <= T <= exp(q_n^{B-eps})
};

Membership u_alpha_membership(const ContinuedFraction& cf, double T, double epsilon, double B);

using IntPair = std::array<std::int64_t, 2>;

struct EFPartition {
  std::vector<IntPair> E;  // m alpha_1 + l alpha_2 above the threshold
  std::vector<IntPair> F;  // at or below it
};

// Pairs (m, l) with 0 < max(|m|, |l|) <= J and m alpha_1 + l alpha_2 > 0, split by
// min(C / e^{max(|m|,|l|)}, alpha_2 / (2m), 1 / (4 pi)). For m <= 0 the middle
// term is non-positive, so those pairs land in E.
EFPartition classify_ef(const AlphaVector& alpha, int J, double C);

struct ConditionReport {
  int J = 0;
  double C = 0.0;
  double mu = 0.0;
  BigFloat min_exp_weighted;  // min |m.alpha| e^{||m||}
  std::vector<std::int64_t> argmin_exp;
  bool holds = false;  // min_exp_weighted > C
  bool exact_dependence = false;
  BigFloat min_poly_weighted;  // min |m.alpha| (||m|| + 1)^mu
  std::vector<std::int64_t> argmin_poly;
};

// Scan over 0 < ||m||_inf <= J (one representative of each +-m pair).
ConditionReport linear_form_condition(std::span<const BigFloat> alpha, double C, int J, double mu = defaults::kBakerMu);

struct DiophantineConfig {
  double C = defaults::kConditionC;
  double epsilon = defaults::kEpsilon;
  double B = defaults::kDecayB;
  int J = defaults::kConditionJ;
  double mu = defaults::kBakerMu;

  // Throws Error(kInvalidArgument) naming the first bad field.
  void validate() const;
};

nlohmann::json to_json(const ContinuedFraction& cf);
nlohmann::json to_json(std::span<const InequalityEntry> entries);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const EFPartition& partition);

}  // namespace zfp
