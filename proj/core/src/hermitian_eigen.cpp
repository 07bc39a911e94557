#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hankel_lti/linalg.hpp"

namespace hlti {

namespace {

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form, accumulating the unitary transform in q. Diagonal lands in d,
// subdiagonal in e (e[k] couples k and k+1).
void tridiagonalize(ComplexMatrix a, RealVector& d, RealVector& e, ComplexMatrix& q) {
  const std::size_t n = a.rows();
  q = ComplexMatrix::identity(n);
  e.assign(n, 0.0);
  ComplexVector ce(n, Complex{0.0, 0.0});  // complex subdiagonal before phasing

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      ce[k] = a(k + 1, k);
      continue;
    }
    const Complex x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    const Complex phase = ax0 > 0.0 ? x0 / ax0 : Complex{1.0, 0.0};
    const Complex alpha = -phase * xnorm;

    ComplexVector v(n, Complex{0.0, 0.0});
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) {
      ce[k] = a(k + 1, k);
      continue;
    }
    const double beta = 2.0 / vnorm2;

    // Hermitian rank-2 update of the trailing block: A <- A - v w^H - w v^H
    ComplexVector p(n, Complex{0.0, 0.0});
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = k + 1; j < n; ++j) acc += a(i, j) * v[j];
      p[i] = beta * acc;
    }
    Complex vk{0.0, 0.0};
    for (std::size_t i = k + 1; i < n; ++i) vk += std::conj(v[i]) * p[i];
    vk *= 0.5 * beta;
    ComplexVector w(n, Complex{0.0, 0.0});
    for (std::size_t i = k + 1; i < n; ++i) w[i] = p[i] - vk * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);

    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }
    ce[k] = alpha;

    // Q <- Q (I - beta v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = k + 1; j < n; ++j) acc += q(i, j) * v[j];
      acc *= beta;
      for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= acc * std::conj(v[j]);
    }
  }
  if (n >= 2) ce[n - 2] = a(n - 1, n - 2);

  d.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();

  // diagonal phase similarity makes the subdiagonal real nonnegative:
  // phi_0 = 1, phi_{k+1} = ce_k phi_k / |ce_k|
  Complex ph{1.0, 0.0};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double aek = std::abs(ce[k]);
    e[k] = aek;
    if (aek > 0.0) ph = ce[k] * ph / aek;
    for (std::size_t i = 0; i < n; ++i) q(i, k + 1) *= ph;
  }
}

// Implicit-shift QL on the real symmetric tridiagonal (d, e), rotations
// accumulated into the complex columns of q.
void tridiagonal_ql(RealVector& d, RealVector& e, ComplexMatrix& q) {
  const std::size_t n = d.size();
  if (n <= 1) return;
  e.push_back(0.0);

  constexpr double eps = 2.220446049250313e-16;
  double anorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]));
  const double floor_abs = eps * anorm;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd + floor_abs) break;
      }
      if (m != l) {
        if (++iter > 80) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? r : -r));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (std::size_t row = 0; row < n; ++row) {
            const Complex zi1 = q(row, i + 1);
            const Complex zi = q(row, i);
            q(row, i + 1) = s * zi + c * zi1;
            q(row, i) = c * zi - s * zi1;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace

EigenResult hermitian_eigen(const ComplexMatrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, "hermitian_eigen requires a square matrix");
  require(m.all_finite(), "hermitian_eigen requires finite entries");
  const std::size_t n = m.rows();

  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
  const double scale = m.max_abs();
  if (defect > 1e-12 * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "hermitian_eigen requires a Hermitian matrix; symmetry defect " << defect
       << " exceeds 1e-12 * " << scale;
    throw std::invalid_argument(os.str());
  }

  RealVector d, e;
  ComplexMatrix q;
  tridiagonalize(m, d, e, q);
  tridiagonal_ql(d, e, q);

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    res.eigenvalues[j] = d[idx[j]];
    for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, j) = q(i, idx[j]);
  }
  return res;
}

}  // namespace hlti
