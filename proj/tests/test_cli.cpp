#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hankel_lti/csv.hpp"
#include "hankel_lti/manifest.hpp"

namespace fs = std::filesystem;

namespace {

const char* kCli = HANKEL_LTI_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = std::string(kCli) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("hankel-lti-test-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit with code 1") {
  CHECK(run("verify --theorem 4 --trials 0") == 1);
  CHECK(run("eps-rank-sweep --scheme unknown-scheme") == 1);
  CHECK(run("definitely-not-a-command") == 1);
  CHECK(run("") == 1);
}

TEST_CASE("verification success and failure exit codes") {
  const fs::path dir = fresh_dir("verify");
  CHECK(run("--out " + dir.string() + " verify --theorem 4 --trials 3") == 0);
  // an impossible tolerance forces a verification failure (exit 2)
  CHECK(run("--out " + dir.string() +
            " verify --theorem kernel --trials 1 --tolerance 1e-300") == 2);
}

TEST_CASE("identical seeds reproduce byte-identical artifacts") {
  const fs::path d1 = fresh_dir("det1");
  const fs::path d2 = fresh_dir("det2");
  const std::string flags = " eps-rank-sweep --scheme markov --n-list 8,16 --trials 3 --seed 42";
  CHECK(run("--out " + d1.string() + flags) == 0);
  CHECK(run("--out " + d2.string() + flags) == 0);
  CHECK(slurp(d1 / "eps-rank-sweep.csv") == slurp(d2 / "eps-rank-sweep.csv"));

  const fs::path d3 = fresh_dir("det3");
  CHECK(run("--out " + d3.string() +
            " eps-rank-sweep --scheme markov --n-list 8,16 --trials 3 --seed 43") == 0);
  CHECK(slurp(d1 / "eps-rank-sweep.csv") != slurp(d3 / "eps-rank-sweep.csv"));
}

TEST_CASE("the environment seed is honored") {
  const fs::path d1 = fresh_dir("env1");
  const fs::path d2 = fresh_dir("env2");
  const std::string cmd = std::string("HANKEL_LTI_SEED=42 ") + kCli + " --out " + d1.string() +
                          " memory --scheme hope --n 8 --horizon 8 --count 4 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(run("--out " + d2.string() + " --seed 42 memory --scheme hope --n 8 --horizon 8 --count 4") ==
        0);
  CHECK(slurp(d1 / "memory.csv") == slurp(d2 / "memory.csv"));
  const hlti::RunManifest m = hlti::read_manifest((d1 / "memory-manifest.json").string());
  CHECK(m.seed == 42);
}

TEST_CASE("manifests replay to matching hashes") {
  const fs::path dir = fresh_dir("replay");
  CHECK(run("--out " + dir.string() +
            " perturb --scheme markov --n 12 --trials 2 --magnitudes 0.01") == 0);
  CHECK(run("--out " + dir.string() + " replay --manifest " +
            (dir / "perturb-manifest.json").string()) == 0);
  CHECK(fs::exists(dir / "replay-perturb" / "perturb-spectra.csv"));
}

TEST_CASE("manifests list every artifact with its hash") {
  const fs::path dir = fresh_dir("manifest");
  CHECK(run("--out " + dir.string() + " histogram --scheme markov --count 4 --n 8 --bins 10") ==
        0);
  const hlti::RunManifest m = hlti::read_manifest((dir / "histogram-manifest.json").string());
  CHECK(m.command == "histogram");
  REQUIRE(m.outputs.size() == 1);
  CHECK(m.outputs[0].path == "histogram.csv");
  CHECK(m.outputs[0].sha256.size() == 64);
}

TEST_CASE("plot renders CSV artifacts into standalone SVG") {
  const fs::path dir = fresh_dir("plot");
  CHECK(run("--out " + dir.string() + " memory --scheme hope --n 8 --horizon 16 --count 4") == 0);
  CHECK(run("--out " + dir.string() + " plot --csv " + (dir / "memory.csv").string() +
            " --kind quantile-band --svg memory.svg --log-y") == 0);
  const std::string svg = slurp(dir / "memory.svg");
  CHECK(svg.find("<svg xmlns") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  // malformed CSV is a usage error
  std::ofstream bad(dir / "bad.csv");
  bad << "a,b\n1,notanumber\n";
  bad.close();
  CHECK(run("--out " + dir.string() + " plot --csv " + (dir / "bad.csv").string() +
            " --kind line --svg bad.svg") == 1);
}

TEST_CASE("spectrum and kernel commands consume JSON fixtures") {
  const fs::path dir = fresh_dir("fixture");
  // h = e0: spectrum [1, 0, ..., 0]
  std::ofstream fx(dir / "e0.json");
  fx << "{\"n\": 6, \"h\": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0]], \"d\": [0,0]}\n";
  fx.close();

  CHECK(run("--out " + dir.string() + " spectrum --fixture " + (dir / "e0.json").string()) == 0);
  const hlti::CsvTable spec = hlti::read_csv((dir / "spectrum.csv").string());
  REQUIRE(spec.rows.size() == 6);
  CHECK(spec.header == std::vector<std::string>{"index", "sigma", "ratio"});
  CHECK(spec.rows[0][1] == 1.0);
  CHECK(spec.rows[0][2] == 1.0);
  for (std::size_t j = 1; j < 6; ++j) CHECK(spec.rows[j][1] < 1e-12);

  // histogram of the same fixture: one bar at ratio 1, the zeros clamped to the floor bin
  CHECK(run("--out " + dir.string() + " histogram --fixture " + (dir / "e0.json").string() +
            " --bins 10") == 0);
  const hlti::CsvTable hist = hlti::read_csv((dir / "histogram.csv").string());
  REQUIRE(hist.rows.size() == 10);
  CHECK(hist.rows.back()[1] == 1.0);
  CHECK(hist.rows.front()[1] == 5.0);

  // kernel impulse response: [d, h0, ..., h5, 0, ...]
  CHECK(run("--out " + dir.string() + " kernel --fixture " + (dir / "e0.json").string() +
            " --length 12") == 0);
  const hlti::CsvTable kern = hlti::read_csv((dir / "kernel.csv").string());
  REQUIRE(kern.rows.size() == 12);
  CHECK(kern.header == std::vector<std::string>{"index", "re", "im", "abs"});
  CHECK(kern.rows[0][3] < 1e-12);         // d = 0
  CHECK(kern.rows[1][1] == doctest::Approx(1.0));  // h_0
  for (std::size_t k = 2; k < 12; ++k) CHECK(kern.rows[k][3] < 1e-12);

  // sampled spectrum from a scheme, then replay
  CHECK(run("--out " + dir.string() + " spectrum --scheme gamma2 --n 12") == 0);
  CHECK(run("--out " + dir.string() + " replay --manifest " +
            (dir / "spectrum-manifest.json").string()) == 0);
}

TEST_CASE("json format writes the table as json") {
  const fs::path dir = fresh_dir("json");
  CHECK(run("--out " + dir.string() +
            " --format json memory --scheme hope --n 8 --horizon 8 --count 2") == 0);
  CHECK(fs::exists(dir / "memory.json"));
  CHECK_FALSE(fs::exists(dir / "memory.csv"));
}
