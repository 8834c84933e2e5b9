#include "zfp/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zfp/arith.hpp"
#include "zfp/error.hpp"

namespace zfp {
namespace {

std::string row_label(std::size_t j) { return "row " + std::to_string(j + 1); }

std::string format_vector(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::int64_t sup_norm(std::span<const std::int64_t> v) {
  std::int64_t out = 0;
  for (const auto x : v) out = std::max(out, x < 0 ? -x : x);
  return out;
}

std::vector<std::vector<std::int64_t>> matrix_of(const RelationSystem& s) {
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(s.rows.size());
  for (const auto& row : s.rows) m.push_back(row.b);
  return m;
}

}  // namespace

std::size_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpz_class f = m[r][c];
      const mpz_class g = m[rank][c];
      mpz_class content = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = m[r][k] * g - m[rank][k] * f;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m[r][k].get_mpz_t());
      }
      if (content > 1)
        for (auto& x : m[r]) x /= content;
    }
    ++rank;
  }
  return rank;
}

RelationSystem validate(const RelationSystem& system) {
  const std::size_t n = system.n;
  if (n == 0) throw Error(ErrorCode::kDimension, "relation system dimension must be positive");
  for (std::size_t j = 0; j < system.rows.size(); ++j) {
    const auto& b = system.rows[j].b;
    if (b.size() != n)
      throw Error(ErrorCode::kDimension, row_label(j) + ": expected " + std::to_string(n) + " entries, got " +
                                             std::to_string(b.size()));
    if (std::all_of(b.begin(), b.end(), [](auto x) { return x == 0; }))
      throw Error(ErrorCode::kZeroRow, row_label(j) + " is the zero vector");
  }
  if (system.rows.size() > n || integer_rank(matrix_of(system)) != system.rows.size())
    throw Error(ErrorCode::kRankDeficient, "relation matrix with " + std::to_string(system.rows.size()) +
                                               " rows is not of full row rank");

  std::set<std::uint64_t> primes;
  for (std::size_t j = 0; j < system.rows.size(); ++j) {
    const auto& row = system.rows[j];
    if (gcd_of(row.b) != 1)
      throw Error(ErrorCode::kRowGcd, row_label(j) + " " + format_vector(row.b) + " has gcd " +
                                          std::to_string(gcd_of(row.b)) + " != 1");
    if (row.a < 1) throw Error(ErrorCode::kNonPositiveExponent, row_label(j) + ": exponent a must be >= 1");
    if (row.q < 1) throw Error(ErrorCode::kBadDenominator, row_label(j) + ": denominator q must be >= 1");
    if (std::gcd(row.a, row.q) != 1)
      throw Error(ErrorCode::kBadDenominator, row_label(j) + ": a/q = " + std::to_string(row.a) + "/" +
                                                  std::to_string(row.q) + " is not in lowest terms");
    if (!is_prime(row.p)) throw Error(ErrorCode::kNotPrime, row_label(j) + ": " + std::to_string(row.p) + " is not prime");
    if (!primes.insert(row.p).second)
      throw Error(ErrorCode::kRepeatedPrime, row_label(j) + ": prime " + std::to_string(row.p) + " repeated");
  }
  return system;
}

bool equal_up_to_row_order(const RelationSystem& a, const RelationSystem& b) {
  if (a.n != b.n || a.rows.size() != b.rows.size()) return false;
  auto key = [](const RelationRow& r) { return std::tie(r.p, r.b, r.a, r.q); };
  auto sa = a.rows;
  auto sb = b.rows;
  const auto less = [&](const RelationRow& x, const RelationRow& y) { return key(x) < key(y); };
  std::sort(sa.begin(), sa.end(), less);
  std::sort(sb.begin(), sb.end(), less);
  return sa == sb;
}

AlphaVector AlphaVector::from_values(std::vector<BigFloat> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].sign() <= 0)
      throw Error(ErrorCode::kDomain, "alpha_" + std::to_string(i + 1) + " must be positive");
    for (std::size_t k = 0; k < i; ++k)
      if (values[k] == values[i])
        throw Error(ErrorCode::kDomain, "alpha_" + std::to_string(k + 1) + " and alpha_" + std::to_string(i + 1) +
                                            " coincide");
  }
  AlphaVector out;
  out.values_ = std::move(values);
  return out;
}

AlphaVector AlphaVector::from_decimal(std::span<const std::string> decimals, int precision_bits) {
  std::vector<BigFloat> values;
  values.reserve(decimals.size());
  for (const auto& d : decimals) values.push_back(BigFloat::from_string(d, precision_bits));
  return from_values(std::move(values));
}

AlphaVector AlphaVector::from_exact(ExactAlpha exact, int precision_bits) {
  std::vector<BigFloat> values;
  values.reserve(exact.size());
  for (const auto& terms : exact) {
    for (const auto& t : terms)
      if (!is_prime(t.p)) throw Error(ErrorCode::kNotPrime, "exact alpha term uses non-prime " + std::to_string(t.p));
    values.push_back(evaluate_exact(terms, precision_bits));
  }
  auto out = from_values(std::move(values));
  out.exact_ = std::move(exact);
  return out;
}

std::vector<double> AlphaVector::rounded() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.to_double());
  return out;
}

BigFloat evaluate_exact(std::span<const AlphaTerm> terms, int precision_bits) {
  const int work = precision_bits + 16;
  BigFloat sum(work);
  for (const auto& t : terms) sum += BigFloat::from_rational(t.coefficient, work) * BigFloat::log_over_two_pi(t.p, work);
  return sum.with_precision(precision_bits);
}

BigFloat relation_target(const RelationRow& row, int precision_bits) {
  const int work = precision_bits + 8;
  const mpq_class ratio(row.a, row.q);
  return (BigFloat::from_rational(ratio, work) * BigFloat::log_over_two_pi(row.p, work)).with_precision(precision_bits);
}

BigFloat dot(std::span<const std::int64_t> m, std::span<const BigFloat> alpha) {
  const int prec = alpha.empty() ? defaults::kPrecisionBits : alpha.front().precision();
  BigFloat sum(prec);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    sum += alpha[i] * static_cast<long>(m[i]);
  }
  return sum;
}

BigFloat max_residual(const RelationSystem& system, std::span<const BigFloat> alpha) {
  const int prec = alpha.empty() ? defaults::kPrecisionBits : alpha.front().precision();
  BigFloat worst(prec);
  for (const auto& row : system.rows) {
    auto r = abs(dot(row.b, alpha) - relation_target(row, prec));
    if (r > worst) worst = r;
  }
  return worst;
}

AlphaVector solve_alpha(const RelationSystem& system, int precision_bits) {
  validate(system);
  const std::size_t n = system.n;
  if (system.rows.size() != n)
    throw Error(ErrorCode::kUnderdetermined, "solve_alpha needs r = n; got r = " + std::to_string(system.rows.size()) +
                                                 ", n = " + std::to_string(n));

  // Gauss-Jordan on [M | I] over Q.
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) aug[i][k] = system.rows[i].b[k];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (aug[pivot][c] == 0) ++pivot;  // full rank guarantees a pivot
    std::swap(aug[c], aug[pivot]);
    const mpq_class inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const mpq_class f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }

  ExactAlpha exact(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& row = system.rows[j];
      mpq_class coefficient = aug[i][n + j] * mpq_class(row.a, row.q);
      coefficient.canonicalize();
      if (coefficient != 0) exact[i].push_back({coefficient, row.p});
    }
  }
  return AlphaVector::from_exact(std::move(exact), precision_bits);
}

RelationSystem detect_relations(const AlphaVector& alpha, const DetectBounds& bounds, double tolerance) {
  const std::size_t n = alpha.size();
  if (n == 0) throw Error(ErrorCode::kDimension, "detect_relations needs a non-empty alpha");
  if (bounds.max_norm < 1 || bounds.max_q < 1 || bounds.max_a < 1 || bounds.max_prime < 2)
    throw Error(ErrorCode::kInvalidArgument, "detect_relations bounds must be positive (max_prime >= 2)");
  const int prec = alpha.precision();

  BigFloat largest(prec);
  for (const auto& v : alpha.values())
    if (abs(v) > largest) largest = abs(v);
  const BigFloat tol(tolerance, prec);
  if (!(tolerance > 0.0) || !(tol < largest * BigFloat(0x1p-80, prec)))
    throw Error(ErrorCode::kInvalidArgument, "detection tolerance must be positive and below 2^-80 |alpha|");

  double boxes = 1.0;
  for (std::size_t i = 0; i < n; ++i) boxes *= 2.0 * bounds.max_norm + 1.0;
  if (boxes > 2e7) throw Error(ErrorCode::kInvalidArgument, "detect_relations search box too large");

  struct Target {
    BigFloat value;
    std::int64_t a, q;
    std::uint64_t p;
  };
  std::vector<Target> targets;
  for (const auto p : primes_upto(bounds.max_prime))
    for (std::int64_t q = 1; q <= bounds.max_q; ++q)
      for (std::int64_t a = 1; a <= bounds.max_a; ++a)
        if (std::gcd(a, q) == 1) targets.push_back({relation_target({{}, a, q, p}, prec), a, q, p});
  std::sort(targets.begin(), targets.end(), [](const Target& x, const Target& y) { return x.value < y.value; });

  // Normalized row b -> (a, q, p, witness m).
  struct Found {
    RelationRow row;
    std::vector<std::int64_t> witness;
  };
  std::map<std::vector<std::int64_t>, Found> found;

  std::vector<std::int64_t> m(n, -bounds.max_norm);
  for (bool done = false; !done;) {
    if (sup_norm(m) > 0) {
      const BigFloat value = dot(m, alpha.values());
      if (value.sign() > 0) {
        const BigFloat lo = value - tol;
        auto it = std::lower_bound(targets.begin(), targets.end(), lo,
                                   [](const Target& t, const BigFloat& x) { return t.value < x; });
        const Target* match = nullptr;
        for (; it != targets.end() && abs(it->value - value) <= tol; ++it) {
          if (match != nullptr)
            throw Error(ErrorCode::kAmbiguousRelation,
                        "m = " + format_vector(m) + " matches both (a,q,p) = (" + std::to_string(match->a) + "," +
                            std::to_string(match->q) + "," + std::to_string(match->p) + ") and (" +
                            std::to_string(it->a) + "," + std::to_string(it->q) + "," + std::to_string(it->p) + ")");
          match = &*it;
        }
        if (match != nullptr) {
          const std::int64_t g = gcd_of(m);
          RelationRow row;
          for (const auto x : m) row.b.push_back(x / g);
          const std::int64_t den = match->q * g;
          const std::int64_t common = std::gcd(match->a, den);
          row.a = match->a / common;
          row.q = den / common;
          row.p = match->p;
          auto [pos, inserted] = found.try_emplace(row.b, Found{row, m});
          if (!inserted && pos->second.row != row)
            throw Error(ErrorCode::kAmbiguousRelation,
                        "row " + format_vector(row.b) + " detected with conflicting targets via m = " +
                            format_vector(pos->second.witness) + " and m = " + format_vector(m));
        }
      }
    }
    std::size_t k = 0;
    while (k < n && m[k] == bounds.max_norm) m[k++] = -bounds.max_norm;
    if (k == n) done = true;
    else ++m[k];
  }

  std::vector<RelationRow> candidates;
  for (auto& [b, f] : found) candidates.push_back(f.row);
  std::stable_sort(candidates.begin(), candidates.end(), [](const RelationRow& x, const RelationRow& y) {
    const auto nx = sup_norm(x.b);
    const auto ny = sup_norm(y.b);
    return nx != ny ? nx < ny : x.b < y.b;
  });

  RelationSystem out{n, {}};
  std::set<std::uint64_t> used;
  for (const auto& row : candidates) {
    if (out.rows.size() == n) break;
    if (used.count(row.p) != 0) continue;
    auto trial = matrix_of(out);
    trial.push_back(row.b);
    if (integer_rank(trial) != trial.size()) continue;
    out.rows.push_back(row);
    used.insert(row.p);
  }
  return validate(out);
}

}  // namespace zfp
