#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "json.hpp"

namespace zfp {

// R x R real values over the torus; entry (i, j) belongs to the cell
// [i/R, (i+1)/R) x [j/R, (j+1)/R). Row index i is the first coordinate.
class Grid2D {
 public:
  explicit Grid2D(int resolution);

  int resolution() const { return resolution_; }
  double cell_width() const { return 1.0 / resolution_; }

  double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * resolution_ + j]; }
  double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * resolution_ + j]; }
  std::span<const double> values() const { return values_; }

  nlohmann::json& metadata() { return metadata_; }
  const nlohmann::json& metadata() const { return metadata_; }

  double mean() const;
  double min() const;
  double max() const;
  Grid2D transposed() const;

 private:
  int resolution_;
  std::vector<double> values_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

// '#'-prefixed metadata lines, then R rows of R comma-separated values in
// shortest round-trip form.
void write_grid_csv(const Grid2D& grid, std::ostream& out);
Grid2D read_grid_csv(std::istream& in);

nlohmann::json grid_sidecar(const Grid2D& grid);

double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace zfp
