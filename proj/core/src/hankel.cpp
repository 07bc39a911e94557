#include "hankel_lti/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hankel_lti/linalg.hpp"

namespace hlti {

void HsvdSpectrum::validate() const {
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    require(std::isfinite(sigma[j]) && sigma[j] >= 0.0, "singular values must be finite and >= 0");
    if (j > 0) require(sigma[j] <= sigma[j - 1], "singular values must be nonincreasing");
  }
}

std::size_t eps_rank(const HsvdSpectrum& spectrum, double eps) {
  require(eps >= 0.0, "eps_rank requires eps >= 0");
  require(spectrum.leading() > 0.0, "eps_rank of an all-zero spectrum is undefined");
  const double s1 = spectrum.leading();
  std::size_t rank = 0;
  for (const double s : spectrum.sigma) {
    if (eps == 0.0 ? (s > 0.0) : (s / s1 > eps))
      ++rank;
    else
      break;
  }
  return rank;
}

ComplexMatrix hankel_from_markov(const ComplexVector& h) {
  const std::size_t n = h.size();
  require(n >= 1, "hankel_from_markov needs at least one parameter");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) m(i, j) = h[i + j];
  return m;
}

TruncatedHankel hankel_truncated(const DiagonalDiscreteSystem& sys, std::size_t block) {
  sys.validate();
  require(block >= 1, "hankel_truncated needs block >= 1");
  const std::size_t n = sys.order();

  // markov sequence h_m = sum_j w_j a_j^m, w_j = b_j c_j, for m < 2N-1
  ComplexVector w(n);
  double wsum = 0.0;
  double rho = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = sys.b[j] * sys.c[j];
    wsum += std::abs(w[j]);
    rho = std::max(rho, std::abs(sys.a[j]));
  }
  ComplexVector powers = w;
  ComplexVector markov(2 * block - 1);
  for (std::size_t m = 0; m < markov.size(); ++m) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) acc += powers[j];
    markov[m] = acc;
    for (std::size_t j = 0; j < n; ++j) powers[j] *= sys.a[j];
  }

  TruncatedHankel out;
  out.matrix = ComplexMatrix(block, block);
  for (std::size_t i = 0; i < block; ++i)
    for (std::size_t j = 0; j < block; ++j) out.matrix(i, j) = markov[i + j];

  // Frobenius bound on the discarded entries: |h_m| <= wsum rho^m and the
  // anti-diagonal m >= N carries m+1 entries.
  const double x = rho * rho;
  const double n_d = static_cast<double>(block);
  double tail2 = 0.0;
  if (x < 1.0) {
    const double xn = std::pow(x, n_d);
    tail2 = wsum * wsum * xn * ((n_d + 1.0) * (1.0 - x) + x) / ((1.0 - x) * (1.0 - x));
  } else {
    tail2 = std::numeric_limits<double>::infinity();
  }
  out.tail_bound = std::sqrt(tail2);
  return out;
}

namespace {

double gramian_scale(const ComplexVector& v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return acc;
}

// P = L L^* through the eigendecomposition, clamping the tiny negative
// eigenvalues these Cauchy-structured Gramians produce.
ComplexMatrix gramian_factor(const ComplexMatrix& p) {
  const EigenResult eig = hermitian_eigen(p);
  const std::size_t n = p.rows();
  const double floor_check = -1e-10 * std::max(1e-300, std::abs(eig.eigenvalues.back()));
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double lam = eig.eigenvalues[j];
    if (lam < 0.0) {
      require(lam >= floor_check, "Gramian is indefinite beyond the clamping tolerance");
      lam = 0.0;
    }
    const double root = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i) l(i, j) = eig.eigenvectors(i, j) * root;
  }
  return l;
}

HsvdSpectrum hsvd_from_gramians(const GramianPair& g) {
  const ComplexMatrix lp = gramian_factor(g.p);
  const ComplexMatrix lq = gramian_factor(g.q);
  HsvdSpectrum spec;
  spec.sigma = singular_values(lq.conj_transpose() * lp);
  return spec;
}

}  // namespace

GramianPair gramians(const DiagonalContinuousSystem& sys) {
  sys.validate();
  const std::size_t n = sys.order();
  GramianPair g{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  const double scale = std::max(gramian_scale(sys.b), gramian_scale(sys.c));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex dp = sys.a[j] + std::conj(sys.a[k]);
      require(std::abs(dp) > 1e-300 * scale, "Gramian denominator vanished (mirrored poles)");
      g.p(j, k) = -sys.b[j] * std::conj(sys.b[k]) / dp;
      const Complex dq = std::conj(sys.a[j]) + sys.a[k];
      g.q(j, k) = -std::conj(sys.c[j]) * sys.c[k] / dq;
    }
  }
  return g;
}

GramianPair gramians(const DiagonalDiscreteSystem& sys) {
  sys.validate();
  const std::size_t n = sys.order();
  GramianPair g{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex dp = 1.0 - sys.a[j] * std::conj(sys.a[k]);
      require(std::abs(dp) > 0.0, "discrete Gramian denominator vanished");
      g.p(j, k) = sys.b[j] * std::conj(sys.b[k]) / dp;
      const Complex dq = 1.0 - std::conj(sys.a[j]) * sys.a[k];
      g.q(j, k) = std::conj(sys.c[j]) * sys.c[k] / dq;
    }
  }
  return g;
}

HsvdSpectrum hsvd(const DiagonalContinuousSystem& sys) { return hsvd_from_gramians(gramians(sys)); }

HsvdSpectrum hsvd(const DiagonalDiscreteSystem& sys) { return hsvd_from_gramians(gramians(sys)); }

HsvdSpectrum hsvd_markov(const ComplexVector& h) {
  const ComplexMatrix m = hankel_from_markov(h);
  // A Hermitian Hankel block (real h) diagonalizes much faster than the
  // general one-sided Jacobi path, and |eigenvalues| are its singular values.
  bool hermitian = true;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n && hermitian; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > 0.0) {
        hermitian = false;
        break;
      }
  HsvdSpectrum spec;
  if (hermitian) {
    const EigenResult eig = hermitian_eigen(m);
    spec.sigma.resize(n);
    for (std::size_t j = 0; j < n; ++j) spec.sigma[j] = std::abs(eig.eigenvalues[j]);
    std::sort(spec.sigma.begin(), spec.sigma.end(), std::greater<double>());
  } else {
    spec.sigma = singular_values(m);
  }
  return spec;
}

HsvdSpectrum hsvd_truncated(const DiagonalDiscreteSystem& sys, std::size_t block) {
  sys.validate();
  require(block >= sys.order(), "hsvd_truncated expects block >= system order");
  const std::size_t n = sys.order();

  // K_ij = a_j^i, (block x n); H = K diag(w) K^T. Householder QR of K gives
  // H = Q (R diag(w) R^T) Q^T, and the small core carries the singular values.
  ComplexMatrix k(block, n);
  for (std::size_t j = 0; j < n; ++j) k(0, j) = 1.0;
  for (std::size_t i = 1; i < block; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = k(i - 1, j) * sys.a[j];

  // in-place Householder QR, keeping only R
  for (std::size_t col = 0; col < n; ++col) {
    double xnorm2 = 0.0;
    for (std::size_t i = col; i < block; ++i) xnorm2 += std::norm(k(i, col));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = k(col, col);
    const double ax0 = std::abs(x0);
    const Complex phase = ax0 > 0.0 ? x0 / ax0 : Complex{1.0, 0.0};
    const Complex alpha = -phase * xnorm;
    ComplexVector v(block - col);
    for (std::size_t i = col; i < block; ++i) v[i - col] = k(i, col);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (const auto& z : v) vnorm2 += std::norm(z);
    if (vnorm2 > 0.0) {
      const double beta = 2.0 / vnorm2;
      for (std::size_t jj = col; jj < n; ++jj) {
        Complex s{0.0, 0.0};
        for (std::size_t i = col; i < block; ++i) s += std::conj(v[i - col]) * k(i, jj);
        s *= beta;
        for (std::size_t i = col; i < block; ++i) k(i, jj) -= s * v[i - col];
      }
    }
    k(col, col) = alpha;
    for (std::size_t i = col + 1; i < block; ++i) k(i, col) = 0.0;
  }

  ComplexMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r(i, j) = k(i, j);

  ComplexMatrix rw = r;  // R diag(w)
  for (std::size_t j = 0; j < n; ++j) {
    const Complex w = sys.b[j] * sys.c[j];
    for (std::size_t i = 0; i < n; ++i) rw(i, j) *= w;
  }
  HsvdSpectrum spec;
  spec.sigma = singular_values(rw * r.transpose());
  spec.sigma.resize(n);
  return spec;
}

HsvHistogram hsv_histogram(std::span<const HsvdSpectrum> spectra, std::size_t bins,
                           double log_floor) {
  require(bins >= 1, "histogram needs at least one bin");
  require(log_floor > 0.0 && log_floor < 1.0, "log_floor must lie in (0, 1)");
  HsvHistogram hist;
  hist.counts.assign(bins, 0);
  hist.bin_edges.resize(bins + 1);
  const double l0 = std::log10(log_floor);
  for (std::size_t i = 0; i <= bins; ++i)
    hist.bin_edges[i] = std::pow(10.0, l0 * (1.0 - static_cast<double>(i) / bins));

  std::size_t above = 0;
  for (const auto& spec : spectra) {
    require(spec.leading() > 0.0, "histogram spectra need sigma_1 > 0");
    for (const double s : spec.sigma) {
      const double ratio = s / spec.leading();
      if (ratio > 0.01) ++above;
      double clamped = std::max(ratio, log_floor);
      const double pos = (std::log10(clamped) - l0) / (0.0 - l0);  // 0 at floor, 1 at ratio 1
      std::size_t bin = pos >= 1.0 ? bins - 1
                                   : static_cast<std::size_t>(pos * static_cast<double>(bins));
      if (bin >= bins) bin = bins - 1;
      ++hist.counts[bin];
      ++hist.total;
    }
  }
  hist.fraction_above_001 =
      hist.total == 0 ? 0.0 : static_cast<double>(above) / static_cast<double>(hist.total);
  return hist;
}

}  // namespace hlti
