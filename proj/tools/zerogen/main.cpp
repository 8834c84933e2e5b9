// zerogen: writes a table of the first N zeta zero ordinates, one per line.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "riemann_siegel.hpp"

namespace fs = std::filesystem;

namespace {

// First line of an existing table, "# zerogen count=N ...", or -1.
long existing_count(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) return -1;
  const auto pos = line.find("count=");
  if (line.rfind("# zerogen", 0) != 0 || pos == std::string::npos) return -1;
  return std::stol(line.substr(pos + 6));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compute zeta zero ordinates (Riemann-Siegel, Gram blocks)"};
  std::size_t count = 100000;
  fs::path out;
  double tolerance = 2e-10;
  bool force = false;
  bool quiet = false;
  app.add_option("-n,--count", count, "number of zeros")->check(CLI::PositiveNumber);
  app.add_option("-o,--out", out, "output text file")->required();
  app.add_option("--tolerance", tolerance, "bracket width for each zero");
  app.add_flag("--force", force, "recompute even if the file already holds enough zeros");
  app.add_flag("-q,--quiet", quiet);
  CLI11_PARSE(app, argc, argv);

  if (!force && existing_count(out) >= static_cast<long>(count)) {
    if (!quiet) std::cerr << out.string() << " already holds " << existing_count(out) << " zeros\n";
    return 0;
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<double> zeros;
  try {
    zeros = zfp::zerogen::compute_zeros(count, tolerance, [&](std::size_t done) {
      if (!quiet && done % 200000 == 0) std::cerr << "  " << done << " zeros\n";
    });
  } catch (const std::exception& e) {
    std::cerr << "zerogen: " << e.what() << '\n';
    return 1;
  }

  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  const fs::path tmp = out.string() + ".tmp";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    if (!f) {
      std::cerr << "zerogen: cannot write " << tmp.string() << '\n';
      return 1;
    }
    std::fprintf(f, "# zerogen count=%zu tolerance=%g\n", zeros.size(), tolerance);
    for (const double g : zeros) std::fprintf(f, "%.9f\n", g);
    std::fclose(f);
  }
  fs::rename(tmp, out);

  if (!quiet) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "wrote " << zeros.size() << " zeros to " << out.string() << " in " << secs << " s\n";
  }
  return 0;
}
