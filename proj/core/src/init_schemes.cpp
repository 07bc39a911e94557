#include "hankel_lti/init_schemes.hpp"

#include <cmath>

#include "hankel_lti/linalg.hpp"

namespace hlti {

void Gamma2Config::validate() const {
  require(n >= 1, "gamma2 needs n >= 1");
  if (distribution == PoleDistribution::boundary_exponent)
    require(alpha > 0.0, "boundary-exponent family needs alpha > 0");
}

DiagonalContinuousSystem sample_gamma2(const Gamma2Config& cfg) {
  cfg.validate();
  SeededRng rng(cfg.seed, cfg.stream);
  DiagonalDiscreteSystem disc;
  disc.a.resize(cfg.n);
  disc.b.assign(cfg.n, Complex{1.0, 0.0});
  disc.c.resize(cfg.n);
  for (std::size_t j = 0; j < cfg.n; ++j) {
    disc.a[j] = cfg.distribution == PoleDistribution::uniform_disk
                    ? rng.next_uniform_disk()
                    : rng.next_boundary_exponent(cfg.alpha);
    // B o C^T entries are N(0,1); the split b = 1, c = gaussian fixes the
    // product without changing the transfer function
    disc.c[j] = Complex{rng.next_gaussian(), 0.0};
  }
  disc.d = Complex{0.0, 0.0};
  return bilinear_inverse(disc);
}

void Gamma1Config::validate() const {
  require(n >= 1, "gamma1 needs n >= 1");
  require(r_min > 0.0 && r_min < r_max, "gamma1 needs 0 < r_min < r_max");
  require(s_max > 0.0, "gamma1 needs s_max > 0");
  if (samples != 0) require(samples >= n, "gamma1 needs at least n sample points");
}

Gamma1Result sample_gamma1(const Gamma1Config& cfg) {
  cfg.validate();
  SeededRng rng(cfg.seed, cfg.stream);
  const std::size_t n = cfg.n;
  const std::size_t count = cfg.samples == 0 ? 2 * n : cfg.samples;

  Gamma1Result out;
  out.system.a.resize(n);
  out.system.b.assign(n, Complex{1.0, 0.0});
  out.system.c.assign(n, Complex{0.0, 0.0});
  out.system.d = Complex{0.0, 0.0};
  const double log_lo = std::log(cfg.r_min), log_hi = std::log(cfg.r_max);
  for (std::size_t j = 0; j < n; ++j) {
    const double re = -std::exp(rng.next_uniform(log_lo, log_hi));
    const double im = rng.next_uniform(-cfg.s_max, cfg.s_max);
    out.system.a[j] = Complex{re, im};
  }

  ComplexVector targets(count);
  RealVector sample_points(count);
  for (std::size_t i = 0; i < count; ++i) {
    sample_points[i] = rng.next_uniform(-cfg.s_max, cfg.s_max);
    targets[i] = rng.next_complex_gaussian();
  }

  ComplexMatrix cauchy(count, n);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cauchy(i, j) = 1.0 / (Complex{0.0, sample_points[i]} - out.system.a[j]);

  const LeastSquaresResult ls = least_squares(cauchy, targets);
  out.system.c = ls.x;
  out.rank_deficient_fit = ls.rank_deficient;
  const double tnorm = vector_norm(targets);
  out.fit_residual = tnorm > 0.0 ? ls.residual_norm / tnorm : ls.residual_norm;
  return out;
}

DenseStateSpace hippo_legs(std::size_t n, SeededRng& rng) {
  require(n >= 1, "hippo_legs needs n >= 1");
  DenseStateSpace sys;
  sys.domain = TimeDomain::continuous;
  sys.a = ComplexMatrix(n, n);
  sys.b.resize(n);
  sys.c.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double rj = std::sqrt(2.0 * static_cast<double>(j) + 1.0);
    sys.b[j] = rj;
    sys.c[j] = rng.next_gaussian();
    for (std::size_t k = 0; k < j; ++k)
      sys.a(j, k) = -rj * std::sqrt(2.0 * static_cast<double>(k) + 1.0);
    sys.a(j, j) = -(static_cast<double>(j) + 1.0);
  }
  sys.d = Complex{0.0, 0.0};
  return sys;
}

DiagonalContinuousSystem s4d_legs_diag(std::size_t n, SeededRng& rng) {
  require(n >= 2 && n % 2 == 0, "s4d_legs_diag needs even n >= 2");
  const DenseStateSpace full = hippo_legs(n, rng);

  // skew part S of A + 1/2 I + P P^T; i S is Hermitian
  ComplexMatrix is(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < j; ++k) {
      const double v = 0.5 * std::sqrt((2.0 * static_cast<double>(j) + 1.0) *
                                       (2.0 * static_cast<double>(k) + 1.0));
      is(j, k) = Complex{0.0, -v};
      is(k, j) = Complex{0.0, v};
    }
  const EigenResult eig = hermitian_eigen(is);

  DiagonalContinuousSystem sys;
  sys.a.resize(n);
  sys.b.resize(n);
  sys.c.resize(n);
  sys.d = Complex{0.0, 0.0};
  // S = W diag(-i mu) W^*, so the normal part -1/2 I + S has a = -1/2 - i mu
  for (std::size_t j = 0; j < n; ++j) sys.a[j] = Complex{-0.5, -eig.eigenvalues[j]};
  for (std::size_t j = 0; j < n; ++j) {
    Complex bj{0.0, 0.0}, cj{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      bj += std::conj(eig.eigenvectors(i, j)) * full.b[i];  // W^* B
      cj += full.c[i] * eig.eigenvectors(i, j);             // C W
    }
    sys.b[j] = bj;
    sys.c[j] = cj;
  }
  return sys;
}

MarkovParams sample_markov(std::size_t n, SeededRng& rng, double scale) {
  require(n >= 1, "sample_markov needs n >= 1");
  MarkovParams p;
  p.h.resize(n);
  for (std::size_t j = 0; j < n; ++j) p.h[j] = Complex{scale * rng.next_gaussian(), 0.0};
  p.d = Complex{rng.next_gaussian(), 0.0};
  return p;
}

}  // namespace hlti
