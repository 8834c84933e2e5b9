#include "zfp/io.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "zfp/error.hpp"

namespace zfp {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where + ": missing \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    bad(where + ": field \"" + key + "\" has the wrong type");
  }
}

std::uint8_t to_byte(double t) { return static_cast<std::uint8_t>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0)); }

void write_header(std::ostream& out, const char* magic, int r) {
  out << magic << '\n' << r << ' ' << r << "\n255\n";
}

}  // namespace

RelationSystem relation_system_from_json(const json& j) {
  RelationSystem s;
  s.n = field<std::size_t>(j, "n", "relation system");
  const auto rows = field<json>(j, "rows", "relation system");
  if (!rows.is_array()) bad("relation system: \"rows\" must be an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "relation row " + std::to_string(i + 1);
    RelationRow row;
    row.b = field<std::vector<std::int64_t>>(rows[i], "b", where);
    row.a = field<std::int64_t>(rows[i], "a", where);
    row.q = field<std::int64_t>(rows[i], "q", where);
    const auto p = field<std::int64_t>(rows[i], "p", where);
    if (p < 0) throw Error(ErrorCode::kNotPrime, where + ": p = " + std::to_string(p) + " is not prime");
    row.p = static_cast<std::uint64_t>(p);
    s.rows.push_back(std::move(row));
  }
  return validate(s);
}

json to_json(const RelationSystem& system) {
  auto rows = json::array();
  for (const auto& r : system.rows) rows.push_back({{"b", r.b}, {"a", r.a}, {"q", r.q}, {"p", r.p}});
  return {{"n", system.n}, {"rows", rows}};
}

AlphaVector alpha_from_json(const json& j, int precision_bits) {
  if (!j.is_object()) bad("alpha: expected an object");
  const bool has_decimal = j.contains("decimal");
  const bool has_exact = j.contains("exact");
  if (has_decimal == has_exact) bad("alpha: exactly one of \"decimal\" or \"exact\" is required");
  if (has_decimal) {
    const auto values = field<std::vector<std::string>>(j, "decimal", "alpha");
    return AlphaVector::from_decimal(values, precision_bits);
  }
  const auto coords = field<json>(j, "exact", "alpha");
  if (!coords.is_array()) bad("alpha: \"exact\" must be an array");
  ExactAlpha exact;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_array()) bad("alpha coordinate " + std::to_string(i + 1) + ": expected a list of terms");
    std::vector<AlphaTerm> terms;
    for (const auto& t : coords[i]) {
      const std::string where = "alpha coordinate " + std::to_string(i + 1);
      const auto num = field<std::int64_t>(t, "num", where);
      const auto den = field<std::int64_t>(t, "den", where);
      const auto p = field<std::int64_t>(t, "p", where);
      if (den == 0) bad(where + ": zero denominator");
      if (p < 2) throw Error(ErrorCode::kNotPrime, where + ": p = " + std::to_string(p) + " is not prime");
      mpq_class c(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
      c.canonicalize();
      terms.push_back({c, static_cast<std::uint64_t>(p)});
    }
    exact.push_back(std::move(terms));
  }
  return AlphaVector::from_exact(std::move(exact), precision_bits);
}

json to_json(const AlphaVector& alpha, int digits) {
  std::vector<std::string> decimals;
  for (const auto& v : alpha.values()) decimals.push_back(v.to_decimal(digits));
  return {{"decimal", decimals}};
}

TestFunction test_function_from_json(const json& j, std::size_t dimension) {
  json terms = j;
  double decay_b = 0.0;
  double decay_c = 0.0;
  if (j.is_object()) {
    terms = field<json>(j, "terms", "test function");
    if (j.contains("decay_b")) decay_b = field<double>(j, "decay_b", "test function");
    if (j.contains("decay_c")) decay_c = field<double>(j, "decay_c", "test function");
  }
  if (!terms.is_array()) bad("test function: expected a list of {\"m\", \"re\", \"im\"} terms");
  std::vector<TestFunction::Entry> entries;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "test function term " + std::to_string(i + 1);
    TestFunction::Entry e;
    e.m = field<Frequency>(terms[i], "m", where);
    const double re = terms[i].contains("re") ? field<double>(terms[i], "re", where) : 0.0;
    const double im = terms[i].contains("im") ? field<double>(terms[i], "im", where) : 0.0;
    e.c = {re, im};
    entries.push_back(std::move(e));
  }
  return TestFunction::from_entries(dimension, entries, decay_b, decay_c);
}

json read_json(std::istream& in, const std::string& what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(what + ": " + e.what());
  }
}

void write_pgm(const Grid2D& grid, std::ostream& out) {
  const int r = grid.resolution();
  const double lo = grid.min();
  const double hi = grid.max();
  write_header(out, "P5", r);
  std::string row(static_cast<std::size_t>(r), '\0');
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j)
      row[j] = static_cast<char>(hi > lo ? to_byte((grid.at(i, j) - lo) / (hi - lo)) : std::uint8_t{128});
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing PGM");
}

void write_ppm_diverging(const Grid2D& grid, std::ostream& out) {
  const int r = grid.resolution();
  const double span = std::max(std::abs(grid.min()), std::abs(grid.max()));
  write_header(out, "P6", r);
  std::string row(static_cast<std::size_t>(3 * r), '\0');
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double v = grid.at(i, j);
      const double t = span > 0.0 ? std::abs(v) / span : 0.0;
      const auto fade = static_cast<char>(to_byte(1.0 - t));
      const auto full = static_cast<char>(255);
      row[3 * j + 0] = v < 0.0 ? fade : full;
      row[3 * j + 1] = fade;
      row[3 * j + 2] = v > 0.0 ? fade : full;
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing PPM");
}

json heatmap_sidecar(const Grid2D& grid, bool diverging) {
  const double lo = grid.min();
  const double hi = grid.max();
  const double span = std::max(std::abs(lo), std::abs(hi));
  return {{"mode", diverging ? "diverging" : "linear"},
          {"v_min", diverging ? -span : lo},
          {"v_max", diverging ? span : hi},
          {"resolution", grid.resolution()},
          {"metadata", grid.metadata()}};
}

}  // namespace zfp
