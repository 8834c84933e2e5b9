#include "zfp/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "zfp/error.hpp"
#include "zfp/format.hpp"
#include "zfp/summation.hpp"

namespace zfp {

Grid2D::Grid2D(int resolution) : resolution_(resolution) {
  if (resolution < 1) throw Error(ErrorCode::kInvalidArgument, "grid resolution must be >= 1");
  values_.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
}

double Grid2D::mean() const {
  KahanSum s;
  for (const double v : values_) s.add(v);
  return s.value() / static_cast<double>(values_.size());
}

double Grid2D::min() const { return *std::min_element(values_.begin(), values_.end()); }
double Grid2D::max() const { return *std::max_element(values_.begin(), values_.end()); }

Grid2D Grid2D::transposed() const {
  Grid2D out(resolution_);
  for (int i = 0; i < resolution_; ++i)
    for (int j = 0; j < resolution_; ++j) out.at(j, i) = at(i, j);
  out.metadata_ = metadata_;
  return out;
}

void write_grid_csv(const Grid2D& grid, std::ostream& out) {
  out << "# resolution: " << grid.resolution() << '\n';
  for (const auto& [key, value] : grid.metadata().items()) out << "# " << key << ": " << value.dump() << '\n';
  std::string line;
  for (int i = 0; i < grid.resolution(); ++i) {
    line.clear();
    for (int j = 0; j < grid.resolution(); ++j) {
      if (j > 0) line += ',';
      line += format_shortest(grid.at(i, j));
    }
    line += '\n';
    out << line;
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing grid CSV");
}

Grid2D read_grid_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  nlohmann::json meta = nlohmann::json::object();
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto colon = line.find(": ");
      if (colon == std::string::npos || colon < 2) continue;
      const std::string key = line.substr(2, colon - 2);
      if (key == "resolution") continue;
      meta[key] = nlohmann::json::parse(line.substr(colon + 2), nullptr, false);
      if (meta[key].is_discarded()) throw Error(ErrorCode::kParse, "grid CSV metadata '" + key + "'");
      continue;
    }
    std::vector<double> row;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      double v = 0.0;
      const auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) throw Error(ErrorCode::kParse, "grid CSV row " + std::to_string(rows.size() + 1));
      row.push_back(v);
      p = next;
      if (p < end && *p == ',') ++p;
    }
    rows.push_back(std::move(row));
  }
  Grid2D grid(static_cast<int>(std::max<std::size_t>(rows.size(), 1)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::kParse, "grid CSV is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) grid.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  grid.metadata() = std::move(meta);
  return grid;
}

nlohmann::json grid_sidecar(const Grid2D& grid) {
  return {{"resolution", grid.resolution()},
          {"min", grid.min()},
          {"max", grid.max()},
          {"mean", grid.mean()},
          {"metadata", grid.metadata()}};
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorCode::kDimension, "pearson_correlation: size mismatch");
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace zfp
