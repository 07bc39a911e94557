// hankel-lti: experiment front end. Every command writes its artifacts plus a
// run manifest; `replay` re-executes a stored manifest and checks the hashes.
//
// Exit codes: 0 success, 1 usage error, 2 verification/replay failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel_lti/csv.hpp"
#include "hankel_lti/experiments.hpp"
#include "hankel_lti/hankel.hpp"
#include "hankel_lti/hope.hpp"
#include "hankel_lti/init_schemes.hpp"
#include "hankel_lti/manifest.hpp"
#include "hankel_lti/parallel.hpp"
#include "hankel_lti/serialize.hpp"
#include "hankel_lti/sha256.hpp"
#include "hankel_lti/svg.hpp"
#include "hankel_lti/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 2024;

struct GlobalOpts {
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::string out_dir = ".";
  std::size_t threads = 0;  // 0 -> hardware concurrency
  std::string format = "csv";

  std::size_t thread_count() const {
    return threads == 0 ? hlti::default_thread_count() : threads;
  }
};

std::uint64_t env_seed_or(std::uint64_t fallback) {
  const char* env = std::getenv("HANKEL_LTI_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("HANKEL_LTI_SEED is not a valid integer: " + std::string(env));
  }
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

// One experiment artifact on disk.
struct Written {
  std::string name;  // relative to out dir
  std::string path;
};

std::string table_to_json_string(const hlti::CsvTable& table) {
  json j;
  j["header"] = table.header;
  j["rows"] = json::array();
  for (const auto& row : table.rows) j["rows"].push_back(row);
  return j.dump(2) + "\n";
}

Written write_table(const GlobalOpts& g, const std::string& stem, const hlti::CsvTable& table) {
  if (g.format == "json") {
    const std::string name = stem + ".json";
    const fs::path path = fs::path(g.out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    hlti::require(f.good(), "cannot open output: " + path.string());
    const std::string body = table_to_json_string(table);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    return {name, path.string()};
  }
  const std::string name = stem + ".csv";
  const fs::path path = fs::path(g.out_dir) / name;
  hlti::write_csv(path.string(), table);
  return {name, path.string()};
}

Written write_text(const GlobalOpts& g, const std::string& name, const std::string& body) {
  const fs::path path = fs::path(g.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  hlti::require(f.good(), "cannot open output: " + path.string());
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  return {name, path.string()};
}

void finish_run(const GlobalOpts& g, const std::string& command,
                std::vector<std::string> normalized_args, const std::vector<Written>& files) {
  hlti::RunManifest manifest;
  manifest.command = command;
  manifest.arguments = std::move(normalized_args);
  manifest.seed = g.seed;
  manifest.timestamp = hlti::current_timestamp_utc();
  manifest.library_version = hlti::kVersion;
  for (const auto& w : files) manifest.outputs.push_back({w.name, hlti::sha256_file(w.path)});
  const fs::path path = fs::path(g.out_dir) / (command + "-manifest.json");
  hlti::write_manifest(path.string(), manifest);
}

std::string fmt_double_arg(double v) { return hlti::format_double(v); }

int run_cli(const std::vector<std::string>& args);

// ---------------- subcommand runners ----------------

int run_sweep(const GlobalOpts& g, const std::string& scheme, std::vector<std::size_t> n_list,
              std::size_t trials, double eps, double alpha) {
  hlti::SweepConfig cfg;
  cfg.scheme = hlti::scheme_from_string(scheme);
  cfg.n_list = std::move(n_list);
  cfg.trials = trials;
  cfg.eps = eps;
  cfg.alpha = alpha;
  cfg.seed = g.seed;
  cfg.threads = g.thread_count();
  const hlti::SweepResult res = hlti::eps_rank_sweep(cfg);

  std::vector<Written> files;
  files.push_back(write_table(g, "eps-rank-sweep", res.table));
  std::vector<std::string> norm{"eps-rank-sweep", "--scheme", scheme, "--trials",
                                std::to_string(trials), "--eps", fmt_double_arg(eps)};
  norm.push_back("--n-list");
  std::string nl;
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i)
    nl += (i ? "," : "") + std::to_string(cfg.n_list[i]);
  norm.push_back(nl);
  if (cfg.scheme == hlti::InitScheme::gamma2_alpha) {
    norm.push_back("--alpha");
    norm.push_back(fmt_double_arg(alpha));
  }
  norm.push_back("--seed");
  norm.push_back(std::to_string(g.seed));
  norm.push_back("--format");
  norm.push_back(g.format);
  finish_run(g, "eps-rank-sweep", norm, files);
  std::cout << "eps-rank-sweep: scheme=" << scheme << " slope=" << res.slope << "\n";
  return 0;
}

int run_perturb(const GlobalOpts& g, const std::string& scheme, std::size_t n,
                std::vector<double> magnitudes, std::size_t trials, double eps, double alpha) {
  hlti::PerturbConfig cfg;
  cfg.scheme = hlti::scheme_from_string(scheme);
  cfg.n = n;
  cfg.magnitudes = std::move(magnitudes);
  cfg.trials = trials;
  cfg.eps = eps;
  cfg.alpha = alpha;
  cfg.seed = g.seed;
  cfg.threads = g.thread_count();
  const hlti::PerturbResult res = hlti::perturb_experiment(cfg);

  std::vector<Written> files;
  files.push_back(write_table(g, "perturb-spectra", res.spectra));
  files.push_back(write_table(g, "perturb-ranks", res.rank_summary));

  std::vector<std::string> norm{"perturb", "--scheme", scheme, "--n", std::to_string(n),
                                "--trials", std::to_string(trials), "--eps", fmt_double_arg(eps)};
  norm.push_back("--magnitudes");
  std::string ms;
  for (std::size_t i = 0; i < cfg.magnitudes.size(); ++i)
    ms += (i ? "," : "") + fmt_double_arg(cfg.magnitudes[i]);
  norm.push_back(ms);
  if (cfg.scheme == hlti::InitScheme::gamma2_alpha) {
    norm.push_back("--alpha");
    norm.push_back(fmt_double_arg(alpha));
  }
  norm.push_back("--seed");
  norm.push_back(std::to_string(g.seed));
  norm.push_back("--format");
  norm.push_back(g.format);
  finish_run(g, "perturb", norm, files);
  for (std::size_t mi = 0; mi < res.median_rank_drop.size(); ++mi)
    std::cout << "perturb: magnitude " << (mi == 0 ? 0.0 : cfg.magnitudes[mi - 1])
              << " median rank drop " << res.median_rank_drop[mi] << "\n";
  return 0;
}

int run_memory(const GlobalOpts& g, const std::string& scheme, std::size_t n, std::size_t horizon,
               double dt, std::size_t count) {
  hlti::MemoryConfig cfg;
  cfg.scheme = hlti::memory_scheme_from_string(scheme);
  cfg.n = n;
  cfg.horizon = horizon;
  cfg.dt = dt;
  cfg.count = count;
  cfg.seed = g.seed;
  cfg.threads = g.thread_count();
  const hlti::MemoryResult res = hlti::memory_experiment(cfg);

  std::vector<Written> files;
  files.push_back(write_table(g, "memory", res.table));
  std::vector<std::string> norm{
      "memory",         "--scheme", scheme,
      "--n",            std::to_string(n),
      "--horizon",      std::to_string(horizon),
      "--dt",           fmt_double_arg(dt),
      "--count",        std::to_string(count),
      "--seed",         std::to_string(g.seed),
      "--format",       g.format};
  finish_run(g, "memory", norm, files);
  std::cout << "memory: scheme=" << scheme << " fit slope=" << res.fit_slope
            << " R2=" << res.fit_r2 << " over " << res.fit_points << " points\n";
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& theorem, std::size_t trials, std::size_t n,
               std::size_t seq_len, double tolerance) {
  hlti::VerifyConfig cfg;
  cfg.kind = hlti::verify_kind_from_string(theorem);
  cfg.trials = trials;
  cfg.n = n;
  cfg.seq_len = seq_len;
  cfg.tolerance = tolerance;
  cfg.seed = g.seed;
  cfg.threads = g.thread_count();
  const hlti::VerifyReport rep = hlti::verify_suite(cfg);

  std::vector<Written> files;
  files.push_back(write_table(g, "verify-" + to_string(cfg.kind), rep.table));
  files.push_back(write_text(g, "verify-" + to_string(cfg.kind) + "-report.json", rep.json));

  std::vector<std::string> norm{"verify",  "--theorem", theorem,
                                "--trials", std::to_string(trials)};
  if (n != 0) {
    norm.push_back("--n");
    norm.push_back(std::to_string(n));
  }
  norm.push_back("--seq-len");
  norm.push_back(std::to_string(seq_len));
  if (tolerance != 0.0) {
    norm.push_back("--tolerance");
    norm.push_back(fmt_double_arg(tolerance));
  }
  norm.push_back("--seed");
  norm.push_back(std::to_string(g.seed));
  norm.push_back("--format");
  norm.push_back(g.format);
  finish_run(g, "verify", norm, files);

  std::cout << "verify " << to_string(cfg.kind) << ": trials=" << rep.trials
            << " violations=" << rep.violations << (rep.passed ? " PASS" : " FAIL") << "\n";
  return rep.passed ? 0 : 2;
}

hlti::HsvdSpectrum spectrum_from_fixture(const std::string& path);

int run_histogram(const GlobalOpts& g, const std::string& scheme, std::size_t count, std::size_t n,
                  std::size_t bins, double log_floor, double alpha, const std::string& fixture) {
  if (!fixture.empty()) {
    std::vector<hlti::HsvdSpectrum> spectra;
    spectra.push_back(spectrum_from_fixture(fixture));
    const hlti::HsvHistogram hist = hlti::hsv_histogram(spectra, bins, log_floor);
    hlti::CsvTable table;
    table.header = {"ratio", "count"};
    for (std::size_t b = 0; b < hist.counts.size(); ++b)
      table.push_row({std::sqrt(hist.bin_edges[b] * hist.bin_edges[b + 1]),
                      double(hist.counts[b])});
    const Written w = write_table(g, "histogram", table);
    finish_run(g, "histogram",
               {"histogram", "--fixture", fixture, "--bins", std::to_string(bins), "--floor",
                fmt_double_arg(log_floor), "--format", g.format},
               {w});
    std::cout << "histogram: fixture fraction(sigma_j/sigma_1 > 0.01)=" << hist.fraction_above_001
              << "\n";
    return 0;
  }
  hlti::HistogramConfig cfg;
  cfg.scheme = hlti::scheme_from_string(scheme);
  cfg.count = count;
  cfg.n = n;
  cfg.bins = bins;
  cfg.log_floor = log_floor;
  cfg.alpha = alpha;
  cfg.seed = g.seed;
  cfg.threads = g.thread_count();
  const hlti::HistogramResult res = hlti::histogram_experiment(cfg);

  std::vector<Written> files;
  files.push_back(write_table(g, "histogram", res.table));
  std::vector<std::string> norm{"histogram", "--scheme", scheme,
                                "--count",   std::to_string(count),
                                "--n",       std::to_string(n),
                                "--bins",    std::to_string(bins),
                                "--floor",   fmt_double_arg(log_floor)};
  if (cfg.scheme == hlti::InitScheme::gamma2_alpha) {
    norm.push_back("--alpha");
    norm.push_back(fmt_double_arg(alpha));
  }
  norm.push_back("--seed");
  norm.push_back(std::to_string(g.seed));
  norm.push_back("--format");
  norm.push_back(g.format);
  finish_run(g, "histogram", norm, files);
  std::cout << "histogram: scheme=" << scheme
            << " fraction(sigma_j/sigma_1 > 0.01)=" << res.fraction_above_001 << "\n";
  return 0;
}

// JSON fixture -> Hankel spectrum; accepts the markov form {n, h, d} as well
// as the diagonal system records.
hlti::HsvdSpectrum spectrum_from_fixture(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  hlti::require(f.good(), "cannot open fixture: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  const std::string text = os.str();
  const json j = json::parse(text);
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "continuous-diagonal")
      return hlti::hsvd(hlti::continuous_from_json_string(text));
    if (kind == "discrete-diagonal") return hlti::hsvd(hlti::discrete_from_json_string(text));
    throw std::invalid_argument("unknown fixture kind: " + kind);
  }
  return hlti::hsvd_markov(hlti::markov_from_json_string(text).h);
}

int run_spectrum(const GlobalOpts& g, const std::string& scheme, const std::string& fixture,
                 std::size_t n, double alpha) {
  hlti::HsvdSpectrum spec;
  std::vector<std::string> norm{"spectrum"};
  if (!fixture.empty()) {
    spec = spectrum_from_fixture(fixture);
    norm.push_back("--fixture");
    norm.push_back(fixture);
  } else {
    spec = hlti::sample_scheme_spectrum(hlti::scheme_from_string(scheme), n, g.seed, 0, alpha);
    norm.insert(norm.end(), {"--scheme", scheme, "--n", std::to_string(n)});
    if (hlti::scheme_from_string(scheme) == hlti::InitScheme::gamma2_alpha) {
      norm.push_back("--alpha");
      norm.push_back(fmt_double_arg(alpha));
    }
    norm.push_back("--seed");
    norm.push_back(std::to_string(g.seed));
  }
  norm.push_back("--format");
  norm.push_back(g.format);

  hlti::CsvTable table;
  table.header = {"index", "sigma", "ratio"};
  const double s1 = spec.leading();
  for (std::size_t j = 0; j < spec.size(); ++j)
    table.push_row({double(j + 1), spec.sigma[j], s1 > 0.0 ? spec.sigma[j] / s1 : 0.0});

  const Written w = write_table(g, "spectrum", table);
  finish_run(g, "spectrum", norm, {w});
  std::cout << "spectrum: wrote " << w.path << " (" << spec.size() << " values)\n";
  return 0;
}

int run_kernel(const GlobalOpts& g, const std::string& fixture, std::size_t n, std::size_t length,
               double dt, const std::string& mode) {
  hlti::MarkovParams params;
  std::vector<std::string> norm{"kernel"};
  if (!fixture.empty()) {
    std::ifstream f(fixture, std::ios::binary);
    hlti::require(f.good(), "cannot open fixture: " + fixture);
    std::ostringstream os;
    os << f.rdbuf();
    params = hlti::markov_from_json_string(os.str());
    norm.push_back("--fixture");
    norm.push_back(fixture);
  } else {
    hlti::SeededRng rng(g.seed, 0);
    params = hlti::sample_markov(n, rng);
    norm.insert(norm.end(), {"--n", std::to_string(n), "--seed", std::to_string(g.seed)});
  }
  const std::size_t len = length == 0 ? 2 * params.order() : length;
  hlti::KernelMode km;
  if (mode == "causal")
    km = hlti::KernelMode::causal;
  else if (mode == "paper-exact")
    km = hlti::KernelMode::paper_exact;
  else
    throw std::invalid_argument("unknown kernel mode: " + mode +
                                " (expected causal|paper-exact)");
  norm.insert(norm.end(), {"--length", std::to_string(len), "--dt", fmt_double_arg(dt), "--mode",
                           mode, "--format", g.format});

  const hlti::KernelPlan plan(params.order(), len, dt, km);
  hlti::ComplexVector impulse(len, hlti::Complex{0.0, 0.0});
  impulse[0] = 1.0;
  const hlti::ComplexVector y = hlti::hope_forward(params, impulse, plan);

  hlti::CsvTable table;
  table.header = {"index", "re", "im", "abs"};
  for (std::size_t k = 0; k < len; ++k)
    table.push_row({double(k), y[k].real(), y[k].imag(), std::abs(y[k])});

  const Written w = write_table(g, "kernel", table);
  finish_run(g, "kernel", norm, {w});
  std::cout << "kernel: wrote " << w.path << " (length " << len << ", dt " << dt << ")\n";
  return 0;
}

int run_plot(const GlobalOpts& g, const std::string& csv_path, const std::string& kind,
             const std::string& svg_name, bool log_x, bool log_y, const std::string& title) {
  const hlti::CsvTable table = hlti::read_csv(csv_path);
  hlti::PlotKind pk;
  if (kind == "line")
    pk = hlti::PlotKind::line;
  else if (kind == "histogram")
    pk = hlti::PlotKind::histogram;
  else if (kind == "quantile-band")
    pk = hlti::PlotKind::quantile_band;
  else
    throw std::invalid_argument("unknown plot kind: " + kind +
                                " (expected line|histogram|quantile-band)");
  hlti::PlotOptions opt;
  opt.log_x = log_x;
  opt.log_y = log_y;
  opt.title = title;
  const std::string body = hlti::emit_svg(table, pk, opt);
  const Written w = write_text(g, svg_name, body);
  std::vector<std::string> norm{"plot", "--csv", csv_path, "--kind", kind, "--svg", svg_name};
  if (log_x) norm.push_back("--log-x");
  if (log_y) norm.push_back("--log-y");
  if (!title.empty()) {
    norm.push_back("--title");
    norm.push_back(title);
  }
  finish_run(g, "plot", norm, {w});
  std::cout << "plot: wrote " << w.path << "\n";
  return 0;
}

int run_replay(const GlobalOpts& g, const std::string& manifest_path) {
  const hlti::RunManifest manifest = hlti::read_manifest(manifest_path);
  const fs::path replay_dir = fs::path(g.out_dir) / ("replay-" + manifest.command);
  fs::create_directories(replay_dir);

  std::vector<std::string> args = manifest.arguments;
  args.push_back("--out");
  args.push_back(replay_dir.string());
  if (g.threads != 0) {
    args.push_back("--threads");
    args.push_back(std::to_string(g.threads));
  }
  std::cout << "replay: " << join_args(args) << "\n";
  const int rc = run_cli(args);
  if (rc != 0) {
    std::cerr << "replay: re-run exited with code " << rc << "\n";
    return rc;
  }

  bool all_match = true;
  for (const auto& out : manifest.outputs) {
    const fs::path produced = replay_dir / out.path;
    if (!fs::exists(produced)) {
      std::cerr << "replay: missing output " << out.path << "\n";
      all_match = false;
      continue;
    }
    const std::string hash = hlti::sha256_file(produced.string());
    const bool ok = hash == out.sha256;
    std::cout << "replay: " << out.path << (ok ? " matches" : " MISMATCH") << "\n";
    all_match = all_match && ok;
  }
  return all_match ? 0 : 2;
}

// ---------------- CLI wiring ----------------

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Hankel-operator analysis of LTI state-space models"};
  app.set_version_flag("--version", hlti::kVersion);
  app.fallthrough();  // manifests store global flags after the subcommand

  GlobalOpts g;
  g.seed = env_seed_or(kDefaultSeed);
  app.add_option("--seed", g.seed, "RNG seed (env HANKEL_LTI_SEED overrides the default)");
  app.add_option("--out", g.out_dir, "output directory")->default_val(".");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)")->default_val(0);
  app.add_option("--format", g.format, "table format")->check(CLI::IsMember({"csv", "json"}));

  // eps-rank-sweep
  auto* sweep = app.add_subcommand("eps-rank-sweep", "eps-rank statistics across state sizes");
  std::string sweep_scheme = "markov";
  std::vector<std::size_t> n_list{16, 32, 64, 128, 256};
  std::size_t sweep_trials = 100;
  double sweep_eps = 0.01, sweep_alpha = 0.5;
  sweep->add_option("--scheme", sweep_scheme, "gamma1|gamma2|gamma2-alpha|gamma3|markov");
  sweep->add_option("--n-list", n_list, "state sizes")->delimiter(',');
  sweep->add_option("--trials", sweep_trials, "trials per size")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--eps", sweep_eps, "relative singular value cutoff");
  sweep->add_option("--alpha", sweep_alpha, "boundary exponent for gamma2-alpha");

  // perturb
  auto* perturb = app.add_subcommand("perturb", "relative HSV curves before/after perturbation");
  std::string pert_scheme = "gamma1";
  std::size_t pert_n = 64, pert_trials = 1;
  std::vector<double> pert_mags{0.001, 0.01};
  double pert_eps = 0.01, pert_alpha = 0.5;
  perturb->add_option("--scheme", pert_scheme, "scheme to perturb");
  perturb->add_option("--n", pert_n, "state size");
  perturb->add_option("--magnitudes", pert_mags, "relative perturbation sizes")->delimiter(',');
  perturb->add_option("--trials", pert_trials, "independent systems")->check(CLI::PositiveNumber);
  perturb->add_option("--eps", pert_eps, "eps-rank cutoff");
  perturb->add_option("--alpha", pert_alpha, "boundary exponent for gamma2-alpha");

  // memory
  auto* memory = app.add_subcommand("memory", "impulse-response magnitude quantiles");
  std::string mem_scheme = "hope";
  std::size_t mem_n = 64, mem_horizon = 128, mem_count = 512;
  double mem_dt = 1.0;
  memory->add_option("--scheme", mem_scheme, "s4d-like|hope");
  memory->add_option("--n", mem_n, "state size / kernel length");
  memory->add_option("--horizon", mem_horizon, "impulse response length T >= n");
  memory->add_option("--dt", mem_dt, "discretization step")->check(CLI::PositiveNumber);
  memory->add_option("--count", mem_count, "number of sampled systems")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "bound-verification suites");
  std::string verify_theorem = "4";
  std::size_t verify_trials = 100, verify_n = 0, verify_seq = 256;
  double verify_tol = 0.0;
  verify->add_option("--theorem", verify_theorem, "2|4|rom|kernel");
  verify->add_option("--trials", verify_trials, "trial count")->check(CLI::PositiveNumber);
  verify->add_option("--n", verify_n, "state size override (0 = per-suite default)");
  verify->add_option("--seq-len", verify_seq, "sequence length for the kernel check");
  verify->add_option("--tolerance", verify_tol, "tolerance override for the kernel check");

  // histogram
  auto* histogram = app.add_subcommand("histogram", "pooled relative-HSV histogram");
  std::string hist_scheme = "gamma3";
  std::size_t hist_count = 512, hist_n = 64, hist_bins = 50;
  double hist_floor = 1e-12, hist_alpha = 0.5;
  std::string hist_fixture;
  histogram->add_option("--scheme", hist_scheme, "scheme to sample");
  histogram->add_option("--count", hist_count, "number of systems")->check(CLI::PositiveNumber);
  histogram->add_option("--n", hist_n, "state size");
  histogram->add_option("--bins", hist_bins, "histogram bins")->check(CLI::PositiveNumber);
  histogram->add_option("--floor", hist_floor, "log-floor for the ratio axis");
  histogram->add_option("--alpha", hist_alpha, "boundary exponent for gamma2-alpha");
  histogram->add_option("--fixture", hist_fixture, "JSON system/markov fixture instead of sampling");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Hankel singular value spectrum as CSV");
  std::string spec_scheme = "markov", spec_fixture;
  std::size_t spec_n = 64;
  double spec_alpha = 0.5;
  spectrum->add_option("--scheme", spec_scheme, "scheme to sample when no fixture is given");
  spectrum->add_option("--fixture", spec_fixture, "JSON system/markov fixture");
  spectrum->add_option("--n", spec_n, "state size for sampled schemes");
  spectrum->add_option("--alpha", spec_alpha, "boundary exponent for gamma2-alpha");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "impulse response of a markov kernel as CSV");
  std::string kern_fixture, kern_mode = "causal";
  std::size_t kern_n = 64, kern_length = 0;
  double kern_dt = 1.0;
  kernel->add_option("--fixture", kern_fixture, "markov-parameter JSON fixture");
  kernel->add_option("--n", kern_n, "kernel length when sampling");
  kernel->add_option("--length", kern_length, "output length (0 = 2n)");
  kernel->add_option("--dt", kern_dt, "discretization step")->check(CLI::PositiveNumber);
  kernel->add_option("--mode", kern_mode, "causal|paper-exact");

  // plot
  auto* plot = app.add_subcommand("plot", "render a CSV artifact to standalone SVG");
  std::string plot_csv, plot_kind = "line", plot_svg = "plot.svg", plot_title;
  bool plot_logx = false, plot_logy = false;
  plot->add_option("--csv", plot_csv, "input CSV")->required();
  plot->add_option("--kind", plot_kind, "line|histogram|quantile-band");
  plot->add_option("--svg", plot_svg, "output SVG filename");
  plot->add_flag("--log-x", plot_logx, "log-scale x axis");
  plot->add_flag("--log-y", plot_logy, "log-scale y axis");
  plot->add_option("--title", plot_title, "plot title");

  // replay
  auto* replay = app.add_subcommand("replay", "re-run a manifest and verify output hashes");
  std::string replay_manifest;
  replay->add_option("--manifest", replay_manifest, "manifest JSON path")->required();

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  fs::create_directories(g.out_dir);

  if (sweep->parsed())
    return run_sweep(g, sweep_scheme, n_list, sweep_trials, sweep_eps, sweep_alpha);
  if (perturb->parsed())
    return run_perturb(g, pert_scheme, pert_n, pert_mags, pert_trials, pert_eps, pert_alpha);
  if (memory->parsed()) return run_memory(g, mem_scheme, mem_n, mem_horizon, mem_dt, mem_count);
  if (verify->parsed())
    return run_verify(g, verify_theorem, verify_trials, verify_n, verify_seq, verify_tol);
  if (histogram->parsed())
    return run_histogram(g, hist_scheme, hist_count, hist_n, hist_bins, hist_floor, hist_alpha,
                         hist_fixture);
  if (spectrum->parsed()) return run_spectrum(g, spec_scheme, spec_fixture, spec_n, spec_alpha);
  if (kernel->parsed()) return run_kernel(g, kern_fixture, kern_n, kern_length, kern_dt, kern_mode);
  if (plot->parsed())
    return run_plot(g, plot_csv, plot_kind, plot_svg, plot_logx, plot_logy, plot_title);
  if (replay->parsed()) return run_replay(g, replay_manifest);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
