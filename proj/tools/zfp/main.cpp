// zfp: command-line front end.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_config.hpp"
#include "zfp/defaults.hpp"
#include "zfp/density.hpp"
#include "zfp/diophantine.hpp"
#include "zfp/empirical.hpp"
#include "zfp/error.hpp"
#include "zfp/format.hpp"
#include "zfp/grid.hpp"
#include "zfp/io.hpp"
#include "zfp/landau.hpp"
#include "zfp/relations.hpp"
#include "zfp/zeros.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  unsigned workers = 1;
  int precision = zfp::defaults::kPrecisionBits;
  fs::path out_dir = ".";
  std::string format = "csv";
};

struct AlphaSource {
  fs::path file;
  std::vector<std::string> decimals;
  fs::path solve_from;
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zfp::Error(zfp::ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

json load_json(const fs::path& path) {
  auto in = open_in(path);
  return zfp::read_json(in, path.string());
}

zfp::RelationSystem load_relations(const fs::path& path) { return zfp::relation_system_from_json(load_json(path)); }

void add_alpha_options(CLI::App* cmd, AlphaSource& src) {
  cmd->add_option("--alpha-file", src.file, "alpha JSON ({\"decimal\": [...]} or {\"exact\": [...]})")
      ->check(CLI::ExistingFile);
  cmd->add_option("--alpha", src.decimals, "alpha as decimal strings")->delimiter(',');
  cmd->add_option("--alpha-from", src.solve_from, "relation system with r = n to solve for alpha")
      ->check(CLI::ExistingFile);
}

std::optional<zfp::AlphaVector> resolve_alpha(const AlphaSource& src, int precision, bool required) {
  const int given = !src.file.empty() + !src.decimals.empty() + !src.solve_from.empty();
  if (given > 1) throw zfp::Error(zfp::ErrorCode::kConfig, "give exactly one of --alpha, --alpha-file, --alpha-from");
  if (given == 0) {
    if (required) throw zfp::Error(zfp::ErrorCode::kConfig, "one of --alpha, --alpha-file, --alpha-from is required");
    return std::nullopt;
  }
  if (!src.file.empty()) return zfp::alpha_from_json(load_json(src.file), precision);
  if (!src.decimals.empty()) return zfp::AlphaVector::from_decimal(src.decimals, precision);
  return zfp::solve_alpha(load_relations(src.solve_from), precision);
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw zfp::Error(zfp::ErrorCode::kIo, "cannot write " + path.string());
}

template <typename Writer>
void write_stream(const fs::path& path, Writer&& writer) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw zfp::Error(zfp::ErrorCode::kIo, "cannot write " + path.string());
  writer(out);
}

std::vector<std::string> write_grid_outputs(const zfp::Grid2D& grid, const Globals& g, const std::string& name,
                                            bool diverging) {
  std::vector<std::string> written;
  auto emit = [&](const fs::path& p) { written.push_back(p.string()); };
  if (g.format == "csv") {
    const fs::path csv = g.out_dir / (name + ".csv");
    write_stream(csv, [&](std::ostream& o) { zfp::write_grid_csv(grid, o); });
    emit(csv);
    const fs::path side = g.out_dir / (name + ".json");
    write_file(side, zfp::grid_sidecar(grid).dump(2) + "\n");
    emit(side);
  } else if (g.format == "json") {
    json values = json::array();
    for (int i = 0; i < grid.resolution(); ++i) {
      json row = json::array();
      for (int j = 0; j < grid.resolution(); ++j) row.push_back(grid.at(i, j));
      values.push_back(std::move(row));
    }
    const fs::path p = g.out_dir / (name + ".json");
    write_file(p, json{{"resolution", grid.resolution()}, {"metadata", grid.metadata()}, {"values", values}}.dump(2) +
                      "\n");
    emit(p);
  }
  const fs::path pgm = g.out_dir / (name + ".pgm");
  write_stream(pgm, [&](std::ostream& o) { zfp::write_pgm(grid, o); });
  emit(pgm);
  write_file(g.out_dir / (name + ".pgm.json"), zfp::heatmap_sidecar(grid, false).dump(2) + "\n");
  emit(g.out_dir / (name + ".pgm.json"));
  if (diverging) {
    const fs::path ppm = g.out_dir / (name + ".ppm");
    write_stream(ppm, [&](std::ostream& o) { zfp::write_ppm_diverging(grid, o); });
    emit(ppm);
    write_file(g.out_dir / (name + ".ppm.json"), zfp::heatmap_sidecar(grid, true).dump(2) + "\n");
    emit(g.out_dir / (name + ".ppm.json"));
  }
  return written;
}

// JSON on --format json, otherwise the fixed-format table.
void report(const Globals& g, const json& j, const std::string& table) {
  if (g.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << table;
  }
}

void print_written(const std::vector<std::string>& files) {
  for (const auto& f : files) std::cout << "wrote " << f << '\n';
}

double default_T(const zfp::ZeroSet& zeros, double T) { return T > 0.0 ? T : zeros.t_max(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limiting densities of fractional parts of zeta zeros"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<zfp::cli::JsonConfig>());
  app.set_config("--config", "", "JSON config mirroring the flags (flags win)");

  Globals g;
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--precision-bits", g.precision, "extended precision in bits")->check(CLI::Range(64, 1 << 16));
  app.add_option("--out-dir", g.out_dir, "directory for output files");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json", "pgm"}));

  // ingest
  auto* ingest = app.add_subcommand("ingest", "parse a text table of zeros and write the binary cache");
  fs::path ingest_in;
  fs::path ingest_out;
  ingest->add_option("--in", ingest_in, "text table, one ordinate per line")->required()->check(CLI::ExistingFile);
  ingest->add_option("--out", ingest_out, "cache file (default <out-dir>/zeros.zfpz)");

  // density
  auto* density = app.add_subcommand("density", "sample g on an R x R grid");
  fs::path density_rel;
  int density_res = 100;
  std::string density_name = "density";
  bool density_div = false;
  density->add_option("--relations", density_rel, "relation system JSON")->required()->check(CLI::ExistingFile);
  density->add_option("--resolution", density_res, "grid resolution R");
  density->add_option("--name", density_name, "output file stem");
  density->add_flag("--diverging", density_div, "also write a diverging P6 heatmap");

  // dm
  auto* dm = app.add_subcommand("dm", "binned DM statistic over zeros");
  fs::path dm_zeros;
  AlphaSource dm_alpha;
  int dm_res = zfp::defaults::kDmResolution;
  double dm_T = 0.0;
  bool dm_asym = false;
  std::string dm_name = "dm";
  bool dm_div = false;
  dm->add_option("--zeros", dm_zeros, "zeros (text or cache)")->required()->check(CLI::ExistingFile);
  add_alpha_options(dm, dm_alpha);
  dm->add_option("--resolution", dm_res, "R = 1/Delta");
  dm->add_option("--T", dm_T, "height (default: largest zero)");
  dm->add_flag("--asymptotic-count", dm_asym, "use n_asymptotic(T) for N(T)");
  dm->add_option("--name", dm_name, "output file stem");
  dm->add_flag("--diverging", dm_div, "also write a diverging P6 heatmap");

  // compare
  auto* compare = app.add_subcommand("compare", "h-sums against the integral of h g");
  fs::path cmp_zeros;
  fs::path cmp_rel;
  fs::path cmp_h;
  AlphaSource cmp_alpha;
  std::vector<double> cmp_T;
  double cmp_tol = zfp::defaults::kConsistencyTolerance;
  compare->add_option("--zeros", cmp_zeros, "zeros (text or cache)")->required()->check(CLI::ExistingFile);
  compare->add_option("--relations", cmp_rel, "relation system JSON")->required()->check(CLI::ExistingFile);
  compare->add_option("--h-spec", cmp_h, "test function JSON")->required()->check(CLI::ExistingFile);
  add_alpha_options(compare, cmp_alpha);
  compare->add_option("--T", cmp_T, "increasing heights")->required()->delimiter(',');
  compare->add_option("--tolerance", cmp_tol, "max |b.alpha - P| accepted");

  // landau
  auto* landau = app.add_subcommand("landau", "sums of x^{i gamma} against the Landau main term");
  fs::path landau_zeros;
  std::vector<double> landau_x;
  double landau_T = 0.0;
  bool landau_ext = false;
  landau->add_option("--zeros", landau_zeros, "zeros (text or cache)")->required()->check(CLI::ExistingFile);
  landau->add_option("--x", landau_x, "x > 1 (repeatable or comma separated)")->required()->delimiter(',');
  landau->add_option("--T", landau_T, "height (default: largest zero)");
  landau->add_flag("--extended-phase", landau_ext, "reduce phases in long double");

  // cf
  auto* cf = app.add_subcommand("cf", "continued fraction of alpha_1 / alpha_2");
  AlphaSource cf_alpha;
  int cf_terms = zfp::defaults::kCfMaxTerms;
  double cf_T = 0.0;
  zfp::DiophantineConfig cf_cfg;
  add_alpha_options(cf, cf_alpha);
  cf->add_option("--terms", cf_terms, "maximum number of partial quotients");
  cf->add_option("--T", cf_T, "test U_alpha membership at this height");
  cf->add_option("--epsilon", cf_cfg.epsilon, "epsilon of U_alpha");
  cf->add_option("--B", cf_cfg.B, "decay exponent B > 4");

  // scan
  auto* scan = app.add_subcommand("scan", "Diophantine condition scan");
  AlphaSource scan_alpha;
  zfp::DiophantineConfig scan_cfg;
  int scan_classify = 0;
  add_alpha_options(scan, scan_alpha);
  scan->add_option("--J", scan_cfg.J, "sup-norm radius");
  scan->add_option("--C", scan_cfg.C, "constant C");
  scan->add_option("--mu", scan_cfg.mu, "polynomial exponent for the Baker diagnostic");
  scan->add_option("--classify-J", scan_classify, "also split pairs into E_J / F_J up to this J (n = 2)");

  // detect
  auto* detect = app.add_subcommand("detect", "search for relations m.alpha = (a/q) log p / (2 pi)");
  AlphaSource det_alpha;
  zfp::DetectBounds bounds;
  double det_tol = zfp::defaults::kDetectTolerance;
  fs::path det_out;
  add_alpha_options(detect, det_alpha);
  detect->add_option("--max-norm", bounds.max_norm, "sup-norm bound on m");
  detect->add_option("--max-prime", bounds.max_prime, "largest prime");
  detect->add_option("--max-q", bounds.max_q, "largest denominator q");
  detect->add_option("--max-a", bounds.max_a, "largest exponent a");
  detect->add_option("--tol", det_tol, "match tolerance");
  detect->add_option("--out", det_out, "relation file (default <out-dir>/relations.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(zfp::ErrorCode::kConfig);
  } catch (const zfp::Error& e) {
    std::cerr << "zfp: error[" << zfp::to_string(e.code()) << "]: " << e.what() << '\n';
    return static_cast<int>(e.code());
  }

  try {
    if (*ingest) {
      auto in = open_in(ingest_in);
      const zfp::ZeroSet zeros = zfp::parse_zeros(in, ingest_in.string());
      const fs::path out = ingest_out.empty() ? g.out_dir / "zeros.zfpz" : ingest_out;
      std::uint64_t bytes = 0;
      write_stream(out, [&](std::ostream& o) { bytes = zfp::write_cache(zeros, o); });
      const json j{{"count", zeros.count()}, {"t_max", zeros.t_max()}, {"bytes", bytes}, {"cache", out.string()}};
      report(g, j,
             "count  " + std::to_string(zeros.count()) + "\nt_max  " + zfp::format_shortest(zeros.t_max()) +
                 "\nbytes  " + std::to_string(bytes) + "\ncache  " + out.string() + "\n");
    } else if (*density) {
      const auto system = load_relations(density_rel);
      auto grid = zfp::g_grid(system, density_res, g.workers);
      grid.metadata()["statistic"] = "g";
      grid.metadata()["relations"] = zfp::to_json(system);
      print_written(write_grid_outputs(grid, g, density_name, density_div));
    } else if (*dm) {
      const auto zeros = zfp::load_zeros_file(dm_zeros);
      const auto alpha = *resolve_alpha(dm_alpha, g.precision, true);
      const auto result =
          zfp::dm_grid(zeros, alpha, dm_res, default_T(zeros, dm_T), {g.workers, dm_asym});
      print_written(write_grid_outputs(result.grid, g, dm_name, dm_div));
    } else if (*compare) {
      const auto zeros = zfp::load_zeros_file(cmp_zeros);
      const auto system = load_relations(cmp_rel);
      auto alpha = resolve_alpha(cmp_alpha, g.precision, false);
      if (!alpha) alpha = zfp::solve_alpha(system, g.precision);
      const auto h = zfp::test_function_from_json(load_json(cmp_h), system.n);
      const auto rep = zfp::theorem_check(zeros, h, system, *alpha, cmp_T, g.workers, cmp_tol);
      const json j = zfp::to_json(rep);
      write_file(g.out_dir / "compare.json", j.dump(2) + "\n");
      std::string table = "integral_h_g " + fmt("%.10f", rep.integral) + "\n";
      table += "T,n_obs,h_sum,difference\n";
      for (const auto& r : rep.rows)
        table += zfp::format_shortest(r.T) + "," + std::to_string(r.n_obs) + "," + fmt("%.10f", r.h_sum) + "," +
                 fmt("%.10f", r.difference) + "\n";
      table += std::string("tail_not_improving ") + (rep.tail_not_improving ? "true" : "false") + "\n";
      report(g, j, table);
    } else if (*landau) {
      const auto zeros = zfp::load_zeros_file(landau_zeros);
      const double T = default_T(zeros, landau_T);
      json arr = json::array();
      std::string table = "x,T,zeros,n_x,lambda,sum_re,sum_im,main_re,main_im,residual_re,residual_im\n";
      for (const double x : landau_x) {
        const auto r = zfp::landau_report(zeros, x, T, {g.workers, landau_ext});
        arr.push_back(zfp::to_json(r));
        table += zfp::format_shortest(x) + "," + zfp::format_shortest(T) + "," + std::to_string(r.zeros_used) + "," +
                 std::to_string(r.n_x) + "," + fmt("%.6f", r.lambda_nx) + "," + fmt("%.6f", r.sum.real()) + "," +
                 fmt("%.6f", r.sum.imag()) + "," + fmt("%.6f", r.main_term.real()) + "," +
                 fmt("%.6f", r.main_term.imag()) + "," + fmt("%.6f", r.residual.real()) + "," +
                 fmt("%.6f", r.residual.imag()) + "\n";
      }
      write_file(g.out_dir / "landau.json", arr.dump(2) + "\n");
      report(g, arr, table);
    } else if (*cf) {
      const auto alpha = *resolve_alpha(cf_alpha, g.precision, true);
      if (alpha.size() != 2) throw zfp::Error(zfp::ErrorCode::kDimension, "cf needs a two-dimensional alpha");
      const auto expansion = zfp::continued_fraction(alpha[0] / alpha[1], cf_terms);
      const auto checks = zfp::convergent_inequality_check(alpha[0], alpha[1], expansion);
      json j{{"continued_fraction", zfp::to_json(expansion)}, {"inequality", zfp::to_json(checks)}};
      std::string table = "n,a_n,p_n,q_n\n";
      for (std::size_t n = 0; n < expansion.size(); ++n)
        table += std::to_string(n) + "," + expansion.quotients[n].get_str() + "," + expansion.p[n].get_str() + "," +
                 expansion.q[n].get_str() + "\n";
      if (expansion.truncated) table += "truncated: precision exhausted\n";
      if (expansion.terminated) table += "terminated: rational ratio\n";
      if (cf_T > 0.0) {
        cf_cfg.validate();
        const auto mem = zfp::u_alpha_membership(expansion, cf_T, cf_cfg.epsilon, cf_cfg.B);
        j["membership"] = {{"T", cf_T}, {"epsilon", cf_cfg.epsilon}, {"B", cf_cfg.B}, {"member", mem.member}};
        if (mem.witness) j["membership"]["witness"] = *mem.witness;
        table += std::string("U_alpha member ") + (mem.member ? "true" : "false") +
                 (mem.witness ? " (n = " + std::to_string(*mem.witness) + ")" : "") + "\n";
      }
      write_file(g.out_dir / "cf.json", j.dump(2) + "\n");
      report(g, j, table);
    } else if (*scan) {
      scan_cfg.validate();
      const auto alpha = *resolve_alpha(scan_alpha, g.precision, true);
      const auto rep = zfp::linear_form_condition(alpha.values(), scan_cfg.C, scan_cfg.J, scan_cfg.mu);
      json j{{"condition", zfp::to_json(rep)}};
      std::string table = "J " + std::to_string(rep.J) + "\nC " + zfp::format_shortest(rep.C) + "\n";
      table += "min |m.alpha| e^|m|  " + rep.min_exp_weighted.to_decimal(12) + "\n";
      table += "min |m.alpha| (|m|+1)^mu  " + rep.min_poly_weighted.to_decimal(12) + "\n";
      table += std::string("condition holds ") + (rep.holds ? "true" : "false") + "\n";
      if (scan_classify > 0) {
        const auto part = zfp::classify_ef(alpha, scan_classify, scan_cfg.C);
        j["classification"] = zfp::to_json(part);
        table += "E_J " + std::to_string(part.E.size()) + "\nF_J " + std::to_string(part.F.size()) + "\n";
      }
      write_file(g.out_dir / "scan.json", j.dump(2) + "\n");
      report(g, j, table);
    } else if (*detect) {
      const auto alpha = *resolve_alpha(det_alpha, g.precision, true);
      const auto system = zfp::detect_relations(alpha, bounds, det_tol);
      const json j = zfp::to_json(system);
      const fs::path out = det_out.empty() ? g.out_dir / "relations.json" : det_out;
      write_file(out, j.dump(2) + "\n");
      std::string table = "r " + std::to_string(system.rows.size()) + "\n";
      for (const auto& row : system.rows) {
        std::string b;
        for (std::size_t i = 0; i < row.b.size(); ++i) b += (i ? " " : "") + std::to_string(row.b[i]);
        table += "b=(" + b + ") a=" + std::to_string(row.a) + " q=" + std::to_string(row.q) +
                 " p=" + std::to_string(row.p) + "\n";
      }
      table += "wrote " + out.string() + "\n";
      report(g, j, table);
    }
  } catch (const zfp::Error& e) {
    std::cerr << "zfp: error[" << zfp::to_string(e.code()) << "]: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "zfp: error[io]: " << e.what() << '\n';
    return static_cast<int>(zfp::ErrorCode::kIo);
  } catch (const std::exception& e) {
    std::cerr << "zfp: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
