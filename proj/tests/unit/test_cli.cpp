#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kCli = ZFP_CLI_PATH;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "zfp_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run zfp_run(const fs::path& dir, const std::string& args) {
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string cmd = kCli.string() + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

const char* kExample1 = R"({"n": 2, "rows": [{"b": [1, 1], "a": 1, "q": 1, "p": 2},
                                             {"b": [1, -1], "a": 1, "q": 2, "p": 3}]})";

}  // namespace

TEST_CASE("ingest an empty file") {
  const auto dir = scratch("ingest_empty");
  write(dir / "empty.txt", "");
  const auto r = zfp_run(dir, "ingest --in " + (dir / "empty.txt").string() + " --out " + (dir / "z.zfpz").string());
  CHECK(r.code == 0);
  CHECK(r.out.find("count  0") != std::string::npos);
  CHECK(fs::file_size(dir / "z.zfpz") == 16);
}

TEST_CASE("ingest reports a non-monotone line") {
  const auto dir = scratch("ingest_bad");
  write(dir / "bad.txt", "14.1\n21.0\n20.5\n");
  const auto r = zfp_run(dir, "ingest --in " + (dir / "bad.txt").string() + " --out " + (dir / "z.zfpz").string());
  CHECK(r.code == 11);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("ingest summary in json") {
  const auto dir = scratch("ingest_json");
  write(dir / "z.txt", "14.134725142\n21.022039639\n");
  const auto r = zfp_run(dir, "--format json ingest --in " + (dir / "z.txt").string() + " --out " +
                                  (dir / "z.zfpz").string());
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("count") == 2);
  CHECK(j.at("t_max") == 21.022039639);
}

TEST_CASE("density rejects R = 1") {
  const auto dir = scratch("density_r1");
  write(dir / "rel.json", kExample1);
  const auto r = zfp_run(dir, "--out-dir " + dir.string() + " density --relations " + (dir / "rel.json").string() +
                                  " --resolution 1");
  CHECK(r.code == 33);
}

TEST_CASE("empty system renders a uniform mid-gray heatmap") {
  const auto dir = scratch("density_empty");
  write(dir / "rel.json", R"({"n": 2, "rows": []})");
  const auto r = zfp_run(dir, "--out-dir " + dir.string() + " density --relations " + (dir / "rel.json").string() +
                                  " --resolution 10");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("wrote") != std::string::npos);
  const auto pgm = slurp(dir / "density.pgm");
  REQUIRE(pgm.size() == std::string("P5\n10 10\n255\n").size() + 100);
  for (std::size_t i = pgm.size() - 100; i < pgm.size(); ++i) CHECK(static_cast<unsigned char>(pgm[i]) == 128);
  CHECK(fs::exists(dir / "density.csv"));
  CHECK(fs::exists(dir / "density.json"));
  CHECK(fs::exists(dir / "density.pgm.json"));
}

TEST_CASE("config file supplies defaults and flags win") {
  const auto dir = scratch("config");
  write(dir / "rel.json", kExample1);
  write(dir / "cfg.json", R"({"density": {"resolution": 7, "name": "from_config"}})");
  const std::string base = "--config " + (dir / "cfg.json").string() + " --out-dir " + dir.string() +
                           " density --relations " + (dir / "rel.json").string();
  REQUIRE(zfp_run(dir, base).code == 0);
  CHECK(slurp(dir / "from_config.pgm").substr(0, 8) == "P5\n7 7\n2");
  REQUIRE(zfp_run(dir, base + " --resolution 9").code == 0);
  CHECK(slurp(dir / "from_config.pgm").substr(0, 8) == "P5\n9 9\n2");
}

TEST_CASE("argument errors exit with the config code") {
  const auto dir = scratch("args");
  CHECK(zfp_run(dir, "density").code == 60);
  CHECK(zfp_run(dir, "--workers 0 cf --alpha 0.1,0.2").code == 60);
  CHECK(zfp_run(dir, "--out-dir " + dir.string() + " cf").code == 60);
  CHECK(zfp_run(dir, "--help").code == 0);
}

TEST_CASE("alpha sources are exclusive") {
  const auto dir = scratch("alpha");
  write(dir / "rel.json", kExample1);
  const auto r = zfp_run(dir, "--out-dir " + dir.string() + " cf --alpha 0.1,0.2 --alpha-from " +
                                  (dir / "rel.json").string());
  CHECK(r.code == 60);
  const auto ok = zfp_run(dir, "--out-dir " + dir.string() + " cf --alpha-from " + (dir / "rel.json").string());
  CHECK(ok.code == 0);
  CHECK(ok.out.substr(0, 14) == "n,a_n,p_n,q_n\n");
  CHECK(ok.out.find("\n0,8,8,1\n") != std::string::npos);
  CHECK(fs::exists(dir / "cf.json"));
}

TEST_CASE("detect writes the recovered system") {
  const auto dir = scratch("detect");
  write(dir / "rel.json", R"({"n": 2, "rows": [{"b": [2, 1], "a": 1, "q": 1, "p": 5},
                                               {"b": [2, 3], "a": 1, "q": 1, "p": 7}]})");
  const auto r = zfp_run(dir, "--out-dir " + dir.string() + " detect --alpha-from " + (dir / "rel.json").string() +
                                  " --max-norm 5 --max-prime 20 --max-q 8 --max-a 4 --tol 1e-30");
  REQUIRE(r.code == 0);
  const auto found = json::parse(slurp(dir / "relations.json"));
  CHECK(found == json::parse(slurp(dir / "rel.json")));
}

TEST_CASE("outputs are byte-identical across worker counts") {
  const auto dir = scratch("workers");
  const auto zeros = fixtures::data_dir() / "zeros_2e6.zfpz";
  write(dir / "rel.json", kExample1);
  write(dir / "h.json", R"([{"m": [1, 1], "re": 0.5}, {"m": [2, -1], "re": 0.1, "im": -0.3}])");
  std::vector<std::string> seen;
  for (const int w : {1, 2, 4, 8}) {
    const auto sub = dir / ("w" + std::to_string(w));
    fs::create_directories(sub);
    const std::string g = "--workers " + std::to_string(w) + " --out-dir " + sub.string() + " ";
    REQUIRE(zfp_run(sub, g + "dm --zeros " + zeros.string() + " --alpha-from " + (dir / "rel.json").string() +
                             " --resolution 40 --diverging")
                .code == 0);
    REQUIRE(zfp_run(sub, g + "landau --zeros " + zeros.string() + " --x 2,3.5 --T 500000").code == 0);
    REQUIRE(zfp_run(sub, g + "compare --zeros " + zeros.string() + " --relations " + (dir / "rel.json").string() +
                             " --h-spec " + (dir / "h.json").string() + " --T 10000,100000")
                .code == 0);
    std::string all;
    for (const char* f : {"dm.csv", "dm.json", "dm.pgm", "dm.ppm", "landau.json", "compare.json"})
      all += slurp(sub / f) + "\x1f";
    seen.push_back(all);
  }
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i] == seen[0]);
}
