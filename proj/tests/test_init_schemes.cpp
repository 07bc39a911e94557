#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hankel_lti/hankel.hpp"
#include "hankel_lti/init_schemes.hpp"
#include "hankel_lti/linalg.hpp"

using namespace hlti;

TEST_CASE("gamma2 systems are stable and reproducible") {
  Gamma2Config cfg;
  cfg.n = 32;
  cfg.seed = 5;
  const DiagonalContinuousSystem a = sample_gamma2(cfg);
  const DiagonalContinuousSystem b = sample_gamma2(cfg);
  for (std::size_t j = 0; j < 32; ++j) {
    CHECK(a.a[j].real() < 0.0);
    CHECK(a.a[j] == b.a[j]);
    CHECK(a.c[j] == b.c[j]);
  }
  cfg.stream = 1;
  const DiagonalContinuousSystem c = sample_gamma2(cfg);
  bool differs = false;
  for (std::size_t j = 0; j < 32; ++j) differs = differs || (a.a[j] != c.a[j]);
  CHECK(differs);
}

TEST_CASE("gamma2 boundary-exponent family is stable too") {
  Gamma2Config cfg;
  cfg.n = 16;
  cfg.distribution = PoleDistribution::boundary_exponent;
  cfg.alpha = 0.5;
  cfg.seed = 6;
  const DiagonalContinuousSystem sys = sample_gamma2(cfg);
  for (std::size_t j = 0; j < 16; ++j) CHECK(sys.a[j].real() < 0.0);
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(sample_gamma2(cfg), std::invalid_argument);
}

TEST_CASE("gamma2 eps-rank sits in the sublinear regime") {
  RealVector ranks;
  for (std::uint64_t t = 0; t < 20; ++t) {
    Gamma2Config cfg;
    cfg.n = 64;
    cfg.seed = 99;
    cfg.stream = t;
    ranks.push_back(double(eps_rank(hsvd(sample_gamma2(cfg)), 0.01)));
  }
  std::sort(ranks.begin(), ranks.end());
  const double median = ranks[ranks.size() / 2];
  CHECK(median >= 5.0);
  CHECK(median <= 40.0);
}

TEST_CASE("gamma1 recovers a planted pole-residue system") {
  // same poles, targets generated from known residues, square solve
  Gamma1Config cfg;
  cfg.n = 8;
  cfg.seed = 11;
  SeededRng rng(cfg.seed, cfg.stream);
  DiagonalContinuousSystem planted;
  planted.a.resize(8);
  planted.b.assign(8, Complex{1.0, 0.0});
  planted.c.resize(8);
  const double log_lo = std::log(cfg.r_min), log_hi = std::log(cfg.r_max);
  for (std::size_t j = 0; j < 8; ++j) {
    planted.a[j] =
        Complex{-std::exp(rng.next_uniform(log_lo, log_hi)), rng.next_uniform(-cfg.s_max, cfg.s_max)};
    planted.c[j] = rng.next_complex_gaussian();
  }
  // feed the identification the planted transfer values at its own sample points
  ComplexMatrix cauchy(16, 8);
  ComplexVector targets(16);
  SeededRng srng(77);
  for (std::size_t i = 0; i < 16; ++i) {
    const double si = srng.next_uniform(-cfg.s_max, cfg.s_max);
    targets[i] = transfer_continuous_at(planted, Complex{0.0, si});
    for (std::size_t j = 0; j < 8; ++j)
      cauchy(i, j) = 1.0 / (Complex{0.0, si} - planted.a[j]);
  }
  const LeastSquaresResult ls = least_squares(cauchy, targets);
  double recovery = 0.0, scale = 0.0;
  ComplexVector fitted = cauchy * ls.x;
  for (std::size_t i = 0; i < 16; ++i) {
    recovery = std::max(recovery, std::abs(fitted[i] - targets[i]));
    scale = std::max(scale, std::abs(targets[i]));
  }
  CHECK(recovery < 1e-8 * std::max(scale, 1.0));
  for (std::size_t j = 0; j < 8; ++j) CHECK(std::abs(ls.x[j] - planted.c[j]) < 1e-6);
}

TEST_CASE("gamma1 construction invariants") {
  Gamma1Config cfg;
  cfg.n = 48;
  cfg.seed = 21;
  const Gamma1Result res = sample_gamma1(cfg);
  res.system.validate();
  for (std::size_t j = 0; j < 48; ++j) {
    CHECK(std::abs(res.system.a[j].real()) <= cfg.r_max * (1.0 + 1e-12));
    CHECK(std::abs(res.system.a[j].real()) >= cfg.r_min * (1.0 - 1e-12));
  }
  CHECK(res.fit_residual >= 0.0);

  Gamma1Config bad = cfg;
  bad.samples = 10;  // < n
  CHECK_THROWS_AS(sample_gamma1(bad), std::invalid_argument);
}

TEST_CASE("gamma1 flags a rank-deficient identification") {
  // collapse the pole cloud to one point: the Cauchy columns coincide
  Gamma1Config cfg;
  cfg.n = 8;
  cfg.r_min = 0.5;
  cfg.r_max = 0.5 * (1.0 + 1e-13);
  cfg.s_max = 1e-13;
  cfg.seed = 9;
  const Gamma1Result res = sample_gamma1(cfg);
  CHECK(res.rank_deficient_fit);
  CHECK(all_finite(res.system.c));  // minimum-norm residues still returned
}

TEST_CASE("gamma1 sensitivity dwarfs the LegS diagonal initialization") {
  RealVector g1_sens, g3_sens;
  for (std::uint64_t t = 0; t < 10; ++t) {
    Gamma1Config cfg;
    cfg.n = 64;
    cfg.seed = 31;
    cfg.stream = t;
    const DiagonalContinuousSystem g1 = sample_gamma1(cfg).system;
    double s1 = 0.0;
    for (std::size_t j = 0; j < 64; ++j)
      s1 = std::max(s1, std::abs(g1.b[j] * g1.c[j]) / std::pow(g1.a[j].real(), 2.0));
    g1_sens.push_back(s1);

    SeededRng rng(31, t + 1000);
    const DiagonalContinuousSystem g3 = s4d_legs_diag(64, rng);
    double s3 = 0.0;
    for (std::size_t j = 0; j < 64; ++j)
      s3 = std::max(s3, std::abs(g3.b[j] * g3.c[j]) / std::pow(g3.a[j].real(), 2.0));
    g3_sens.push_back(s3);
  }
  std::sort(g1_sens.begin(), g1_sens.end());
  std::sort(g3_sens.begin(), g3_sens.end());
  CHECK(g1_sens[5] > 1e3 * g3_sens[5]);
}

TEST_CASE("hippo-legs matrix entries and structure") {
  SeededRng rng(41);
  const DenseStateSpace sys = hippo_legs(6, rng);
  CHECK(sys.a(0, 0) == Complex{-1.0, 0.0});
  CHECK(std::abs(sys.a(1, 0) + std::sqrt(3.0)) < 1e-15);
  CHECK(sys.a(1, 1) == Complex{-2.0, 0.0});
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t k = j + 1; k < 6; ++k) CHECK(sys.a(j, k) == Complex{0.0, 0.0});
    CHECK(sys.a(j, j) == Complex{-(double(j) + 1.0), 0.0});
    CHECK(std::abs(sys.b[j] - std::sqrt(2.0 * double(j) + 1.0)) < 1e-15);
  }
  sys.validate_stability();  // triangular: eigenvalues are the diagonal
}

TEST_CASE("s4d-legs diagonal form") {
  SeededRng rng(42);
  const std::size_t n = 16;
  const DiagonalContinuousSystem sys = s4d_legs_diag(n, rng);
  for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(sys.a[j].real() + 0.5) < 1e-10);

  // spectrum closed under conjugation
  for (std::size_t j = 0; j < n; ++j) {
    const Complex target = std::conj(sys.a[j]);
    double best = 1e300;
    for (std::size_t k = 0; k < n; ++k) best = std::min(best, std::abs(sys.a[k] - target));
    CHECK(best < 1e-9);
  }

  // the diagonal form preserves the transfer function of the normal part
  SeededRng rng2(42);
  const DenseStateSpace full = hippo_legs(n, rng2);
  DenseStateSpace normal = full;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        normal.a(i, j) = Complex{-0.5, 0.0};
      } else {
        const double v = 0.5 * std::sqrt((2.0 * double(i) + 1.0) * (2.0 * double(j) + 1.0));
        normal.a(i, j) = Complex{i > j ? -v : v, 0.0};
      }
    }
  for (int p = 0; p < 8; ++p) {
    const Complex s{0.4 + 0.2 * p, 0.3 * p - 1.0};
    const Complex diag_val = transfer_continuous_at(sys, s);
    const Complex dense_val = transfer_dense_at(normal, s);
    CHECK(std::abs(diag_val - dense_val) < 1e-8 * std::max(1.0, std::abs(dense_val)));
  }

  CHECK_THROWS_AS(s4d_legs_diag(7, rng), std::invalid_argument);
}

TEST_CASE("s4d-legs spectra are rankful at initialization") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    SeededRng rng(43, t);
    const DiagonalContinuousSystem sys = s4d_legs_diag(64, rng);
    CHECK(eps_rank(hsvd(sys), 0.01) >= 32);
  }
}

TEST_CASE("markov samples: determinism and variance") {
  SeededRng rng_a(50), rng_b(50);
  const MarkovParams a = sample_markov(16, rng_a, 2.0);
  const MarkovParams b = sample_markov(16, rng_b, 2.0);
  for (std::size_t j = 0; j < 16; ++j) CHECK(a.h[j] == b.h[j]);
  CHECK(a.d == b.d);

  SeededRng rng(51);
  const MarkovParams big = sample_markov(4096, rng, 1.5);
  double var = 0.0;
  for (const auto& z : big.h) {
    CHECK(z.imag() == 0.0);
    var += std::norm(z);
  }
  var /= 4096.0;
  CHECK(std::abs(var - 2.25) < 0.05 * 2.25);
}
