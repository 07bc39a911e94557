#pragma once

#include "hankel_lti/hankel.hpp"
#include "hankel_lti/state_space.hpp"

namespace hlti {

/// Square-root balanced truncation of a stable diagonal system.
/// The certificate is the standard 2 * sum of the discarded singular values;
/// balanced_gramian_residual reports how far the full balanced realization is
/// from having P = Q = diag(sigma).
struct BalancedTruncation {
  DenseStateSpace reduced;            // order k, continuous
  HsvdSpectrum spectrum;              // full Hankel spectrum of the input
  double error_bound = 0.0;           // 2 * sum_{j>k} sigma_j
  double balanced_gramian_residual = 0.0;
};

BalancedTruncation balanced_truncation(const DiagonalContinuousSystem& sys, std::size_t k);

/// Full-order balanced realization (k = n), exposed for the spectrum
/// invariance checks.
DenseStateSpace balanced_realization(const DiagonalContinuousSystem& sys);

}  // namespace hlti
