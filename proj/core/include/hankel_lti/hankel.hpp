#pragma once

#include <cstddef>
#include <span>

#include "hankel_lti/state_space.hpp"
#include "hankel_lti/types.hpp"

namespace hlti {

/// Ordered Hankel singular values sigma_1 >= ... >= sigma_n >= 0.
struct HsvdSpectrum {
  RealVector sigma;

  std::size_t size() const { return sigma.size(); }
  double leading() const { return sigma.empty() ? 0.0 : sigma.front(); }
  void validate() const;
};

/// rank_eps = max{ j : sigma_j / sigma_1 > eps }, 1-based count.
/// eps = 0 counts the strictly positive singular values.
std::size_t eps_rank(const HsvdSpectrum& spectrum, double eps);

/// H_ij = h_{i+j} for i+j < n, zero below the anti-diagonal.
ComplexMatrix hankel_from_markov(const ComplexVector& h);

struct TruncatedHankel {
  ComplexMatrix matrix;     // N x N block, entries C A^(i+j) B
  double tail_bound = 0.0;  // spectral-norm bound on the discarded part
};

/// Leading N x N block of the doubly infinite Hankel matrix of a stable
/// discrete diagonal system.
TruncatedHankel hankel_truncated(const DiagonalDiscreteSystem& sys, std::size_t block);

/// Controllability/observability pair with Lyapunov residuals within
/// 1e-10 of the data scale.
struct GramianPair {
  ComplexMatrix p;
  ComplexMatrix q;
};

/// Closed forms for diagonal systems:
/// continuous  P_jk = -b_j conj(b_k) / (a_j + conj(a_k)),
/// discrete    P_jk =  b_j conj(b_k) / (1 - a_j conj(a_k)), analogous Q.
GramianPair gramians(const DiagonalContinuousSystem& sys);
GramianPair gramians(const DiagonalDiscreteSystem& sys);

/// Hankel singular values via Gramian square roots: sigma = singular values
/// of L_Q^* L_P with P = L_P L_P^*, Q = L_Q L_Q^*. Factors come from the
/// Hermitian eigendecomposition with negative eigenvalues clamped to zero.
HsvdSpectrum hsvd(const DiagonalContinuousSystem& sys);
HsvdSpectrum hsvd(const DiagonalDiscreteSystem& sys);

/// Spectrum of the n x n anti-triangular Hankel matrix built from h.
HsvdSpectrum hsvd_markov(const ComplexVector& h);

/// Singular values of the N x N truncated Hankel block, computed through the
/// rank-n factorization H = K diag(b.c) K^T (K the Krylov/Vandermonde factor)
/// so that large blocks stay tractable. Agrees with svd(hankel_truncated)
/// to roundoff.
HsvdSpectrum hsvd_truncated(const DiagonalDiscreteSystem& sys, std::size_t block);

struct HsvHistogram {
  RealVector bin_edges;             // log-spaced, size bins+1, last edge 1.0
  std::vector<std::size_t> counts;  // ratios below the floor land in bin 0
  std::size_t total = 0;
  double fraction_above_001 = 0.0;  // share of ratios sigma_j/sigma_1 > 0.01
};

HsvHistogram hsv_histogram(std::span<const HsvdSpectrum> spectra, std::size_t bins,
                           double log_floor);

}  // namespace hlti
