#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hankel_lti/csv.hpp"
#include "hankel_lti/hankel.hpp"
#include "hankel_lti/rng.hpp"
#include "hankel_lti/types.hpp"

namespace hlti {

enum class InitScheme { gamma1, gamma2, gamma2_alpha, gamma3, markov };

InitScheme scheme_from_string(const std::string& name);
std::string to_string(InitScheme scheme);

/// Hankel spectrum of one sampled instance of a scheme; trial streams are
/// derived from (seed, n, trial) so sweeps replay exactly.
HsvdSpectrum sample_scheme_spectrum(InitScheme scheme, std::size_t n, std::uint64_t seed,
                                    std::uint64_t stream, double alpha);

struct SweepConfig {
  InitScheme scheme = InitScheme::markov;
  std::vector<std::size_t> n_list{16, 32, 64, 128, 256};
  std::size_t trials = 100;
  double eps = 0.01;
  double alpha = 0.5;  // gamma2-alpha only
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct SweepResult {
  CsvTable table;  // n, mean, median, p10, p90, slope
  double slope = 0.0;
  std::vector<RealVector> medians_by_n;            // [n_index] -> {median}
  std::vector<std::vector<std::size_t>> ranks;     // [n_index][trial]
};

SweepResult eps_rank_sweep(const SweepConfig& cfg);

struct PerturbConfig {
  InitScheme scheme = InitScheme::gamma1;
  std::size_t n = 64;
  std::vector<double> magnitudes{0.001, 0.01};  // fractions of ||a||_2 or ||h||_2
  std::size_t trials = 1;
  double eps = 0.01;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct PerturbResult {
  CsvTable spectra;       // trial, j, ratio at magnitude 0 and each requested magnitude
  CsvTable rank_summary;  // trial, eps-rank at each magnitude
  RealVector median_rank_drop;  // per magnitude, relative to the unperturbed rank
  RealVector max_ratio_shift;   // per magnitude, max_j |ratio_m(j) - ratio_0(j)| over trials
};

PerturbResult perturb_experiment(const PerturbConfig& cfg);

enum class MemoryScheme { s4d_like, hope };

MemoryScheme memory_scheme_from_string(const std::string& name);

struct MemoryConfig {
  MemoryScheme scheme = MemoryScheme::hope;
  std::size_t n = 64;
  std::size_t horizon = 128;  // T >= n
  double dt = 1.0;
  std::size_t count = 512;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct MemoryResult {
  CsvTable table;  // t, min, q1, median, q3, max of |y(t)|
  double fit_slope = 0.0;  // log-linear fit of the median over its positive range
  double fit_r2 = 0.0;
  std::size_t fit_points = 0;
};

MemoryResult memory_experiment(const MemoryConfig& cfg);

enum class VerifyKind { theorem2, theorem4, rom, kernel };

VerifyKind verify_kind_from_string(const std::string& name);
std::string to_string(VerifyKind kind);

struct VerifyConfig {
  VerifyKind kind = VerifyKind::theorem4;
  std::size_t trials = 100;
  std::size_t n = 0;        // 0 -> per-kind default
  std::size_t seq_len = 256;  // kernel check
  double tolerance = 0.0;     // 0 -> per-kind default
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct VerifyReport {
  VerifyKind kind = VerifyKind::theorem4;
  std::size_t trials = 0;
  std::size_t violations = 0;
  bool passed = false;
  double worst_margin = 0.0;  // most adverse measured/bound ratio (or error/tolerance)
  CsvTable table;             // per-trial bound/measured pairs
  std::string json;           // full report for the CLI
};

VerifyReport verify_suite(const VerifyConfig& cfg);

struct HistogramConfig {
  InitScheme scheme = InitScheme::gamma3;
  std::size_t count = 512;
  std::size_t n = 64;
  std::size_t bins = 50;
  double log_floor = 1e-12;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct HistogramResult {
  CsvTable table;  // ratio bin center, count
  double fraction_above_001 = 0.0;
};

HistogramResult histogram_experiment(const HistogramConfig& cfg);

/// Stable diagonal test systems shared by the verification suites:
/// log-uniform pole depths in [0.05, 2], frequencies uniform in [-3, 3],
/// unit b, complex Gaussian c.
DiagonalContinuousSystem random_stable_system(SeededRng& rng, std::size_t n);

}  // namespace hlti
