#pragma once

#include <cstdint>

#include "hankel_lti/hope.hpp"
#include "hankel_lti/rng.hpp"
#include "hankel_lti/state_space.hpp"

namespace hlti {

enum class PoleDistribution { uniform_disk, boundary_exponent };

/// Random-LTI construction: discrete poles on the open unit disk (or the
/// boundary-concentrated alpha family), unit B, Gaussian C, pulled back to
/// continuous form through the inverse bilinear transform.
struct Gamma2Config {
  std::size_t n = 64;
  PoleDistribution distribution = PoleDistribution::uniform_disk;
  double alpha = 1.0;  // boundary family only
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  void validate() const;
};

DiagonalContinuousSystem sample_gamma2(const Gamma2Config& cfg);

/// Transfer-sample identification: fixed random near-axis poles, residues
/// fitted by least squares on the Cauchy matrix [1 / (i s_j - a_k)] against
/// Gaussian target values. Narrow sample band relative to the pole depth
/// range keeps the fitted modes interacting, which is what makes the scheme
/// fragile under pole perturbations.
struct Gamma1Config {
  std::size_t n = 64;
  std::size_t samples = 0;  // 0 -> 2n
  double s_max = 1.0;
  double r_min = 1e-3;
  double r_max = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  void validate() const;
};

struct Gamma1Result {
  DiagonalContinuousSystem system;
  double fit_residual = 0.0;  // relative to the target norm
  bool rank_deficient_fit = false;
};

Gamma1Result sample_gamma1(const Gamma1Config& cfg);

/// HiPPO-LegS matrices: A_jk = -sqrt(2j+1) sqrt(2k+1) (j > k), -(j+1) on the
/// diagonal, zero above; B_j = sqrt(2j+1); C standard normal.
DenseStateSpace hippo_legs(std::size_t n, SeededRng& rng);

/// Diagonal S4D-LegS form: a_j = -1/2 + i lambda_j with lambda from the
/// Hermitian eigenproblem of i * (skew part of HiPPO-LegS), b and c carried
/// through the eigenvector basis. n must be even.
DiagonalContinuousSystem s4d_legs_diag(std::size_t n, SeededRng& rng);

/// h_j i.i.d. real N(0, scale^2), feedthrough N(0,1).
MarkovParams sample_markov(std::size_t n, SeededRng& rng, double scale = 1.0);

}  // namespace hlti
