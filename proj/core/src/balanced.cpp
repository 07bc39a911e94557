#include "hankel_lti/balanced.hpp"

#include <cmath>

#include "hankel_lti/linalg.hpp"

namespace hlti {

namespace {

ComplexMatrix gramian_factor_psd(const ComplexMatrix& p) {
  const EigenResult eig = hermitian_eigen(p);
  const std::size_t n = p.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double lam = std::max(eig.eigenvalues[j], 0.0);
    const double root = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i) l(i, j) = eig.eigenvectors(i, j) * root;
  }
  return l;
}

struct BalanceCore {
  ComplexMatrix t;       // n x k,   T = L_P V_k S_k^{-1/2}
  ComplexMatrix t_left;  // k x n,   T^+ = S_k^{-1/2} U_k^* L_Q^*
  HsvdSpectrum spectrum;
};

BalanceCore balance_core(const DiagonalContinuousSystem& sys, std::size_t k) {
  const GramianPair g = gramians(sys);
  const ComplexMatrix lp = gramian_factor_psd(g.p);
  const ComplexMatrix lq = gramian_factor_psd(g.q);
  const SvdResult s = svd(lq.conj_transpose() * lp);
  const std::size_t n = sys.order();

  BalanceCore core;
  core.spectrum.sigma = s.singular_values;
  require(k >= 1 && k <= n, "truncation order must lie in [1, n]");
  require(s.singular_values[k - 1] > 0.0, "cannot balance through a zero singular value");

  core.t = ComplexMatrix(n, k);
  core.t_left = ComplexMatrix(k, n);
  for (std::size_t j = 0; j < k; ++j) {
    const double inv_root = 1.0 / std::sqrt(s.singular_values[j]);
    for (std::size_t i = 0; i < n; ++i) {
      Complex tv{0.0, 0.0};
      for (std::size_t m = 0; m < n; ++m) tv += lp(i, m) * s.v(m, j);
      core.t(i, j) = tv * inv_root;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex lv{0.0, 0.0};
      for (std::size_t m = 0; m < n; ++m) lv += std::conj(s.u(m, j)) * std::conj(lq(i, m));
      core.t_left(j, i) = lv * inv_root;
    }
  }
  return core;
}

DenseStateSpace project(const DiagonalContinuousSystem& sys, const BalanceCore& core,
                        std::size_t k) {
  const std::size_t n = sys.order();
  DenseStateSpace red;
  red.domain = TimeDomain::continuous;
  red.a = ComplexMatrix(k, k);
  red.b.assign(k, Complex{0.0, 0.0});
  red.c.assign(k, Complex{0.0, 0.0});
  red.d = sys.d;
  // A_r = T^+ diag(a) T
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t m = 0; m < n; ++m) acc += core.t_left(i, m) * sys.a[m] * core.t(m, j);
      red.a(i, j) = acc;
    }
  for (std::size_t i = 0; i < k; ++i) {
    Complex accb{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) accb += core.t_left(i, m) * sys.b[m];
    red.b[i] = accb;
    Complex accc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) accc += sys.c[m] * core.t(m, i);
    red.c[i] = accc;
  }
  return red;
}

double gramian_residual(const DenseStateSpace& bal, const RealVector& sigma) {
  const std::size_t n = bal.order();
  // residuals of A S + S A^* + B B^* and A^* S + S A + C^* C with S = diag(sigma)
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(bal.b[i] * std::conj(bal.b[i])));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex rp = bal.a(i, j) * sigma[j] + sigma[i] * std::conj(bal.a(j, i)) +
                         bal.b[i] * std::conj(bal.b[j]);
      const Complex rq = std::conj(bal.a(j, i)) * sigma[j] + sigma[i] * bal.a(i, j) +
                         std::conj(bal.c[i]) * bal.c[j];
      worst = std::max(worst, std::max(std::abs(rp), std::abs(rq)));
    }
  return worst;
}

}  // namespace

DenseStateSpace balanced_realization(const DiagonalContinuousSystem& sys) {
  sys.validate();
  const BalanceCore core = balance_core(sys, sys.order());
  return project(sys, core, sys.order());
}

BalancedTruncation balanced_truncation(const DiagonalContinuousSystem& sys, std::size_t k) {
  sys.validate();
  const std::size_t n = sys.order();
  const BalanceCore core = balance_core(sys, k);
  if (k < n) {
    const double gap = core.spectrum.sigma[k - 1] - core.spectrum.sigma[k];
    require(gap > 0.0, "repeated Hankel singular value at the truncation cut");
  }

  BalancedTruncation out;
  out.spectrum = core.spectrum;
  out.reduced = project(sys, core, k);
  double tail = 0.0;
  for (std::size_t j = k; j < n; ++j) tail += core.spectrum.sigma[j];
  out.error_bound = 2.0 * tail;

  const BalanceCore full = balance_core(sys, n);
  const DenseStateSpace bal = project(sys, full, n);
  out.balanced_gramian_residual = gramian_residual(bal, full.spectrum.sigma);
  return out;
}

}  // namespace hlti
