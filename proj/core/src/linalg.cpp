#include "hankel_lti/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace hlti {

ComplexMatrix ComplexMatrix::conj_transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  require(cols_ == rhs.rows_, "matrix product dimension mismatch");
  ComplexMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Complex* lrow = row(i);
    Complex* out = r.row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex lik = lrow[k];
      if (lik == Complex{0.0, 0.0}) continue;
      const Complex* rrow = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) out[j] += lik * rrow[j];
    }
  }
  return r;
}

ComplexVector ComplexMatrix::operator*(const ComplexVector& rhs) const {
  require(cols_ == rhs.size(), "matrix-vector dimension mismatch");
  ComplexVector r(rows_, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < rows_; ++i) {
    const Complex* lrow = row(i);
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < cols_; ++j) acc += lrow[j] * rhs[j];
    r[i] = acc;
  }
  return r;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum dimension mismatch");
  ComplexMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference dimension mismatch");
  ComplexMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= rhs.data_[i];
  return r;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

double ComplexMatrix::norm() const {
  double acc = 0.0;
  for (const auto& z : data_) acc += std::norm(z);
  return std::sqrt(acc);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double vector_norm(const ComplexVector& v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

double vector_norm(const RealVector& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

Complex dot_conj(const ComplexVector& a, const ComplexVector& b) {
  require(a.size() == b.size(), "dot product dimension mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

bool all_finite(const ComplexVector& v) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

namespace {

struct Lu {
  ComplexMatrix lu;
  std::vector<std::size_t> piv;
};

Lu lu_factor(const ComplexMatrix& a) {
  require(a.rows() == a.cols(), "LU requires a square matrix");
  const std::size_t n = a.rows();
  Lu f{a, std::vector<std::size_t>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) throw std::runtime_error("LU factorization hit a singular pivot");
    f.piv[k] = p;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
    const Complex pivot = f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = f.lu(i, k) / pivot;
      f.lu(i, k) = m;
      if (m == Complex{0.0, 0.0}) continue;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

ComplexVector lu_apply(const Lu& f, ComplexVector b) {
  const std::size_t n = f.piv.size();
  for (std::size_t k = 0; k < n; ++k)
    if (f.piv[k] != k) std::swap(b[k], b[f.piv[k]]);
  for (std::size_t i = 1; i < n; ++i) {
    Complex acc = b[i];
    for (std::size_t j = 0; j < i; ++j) acc -= f.lu(i, j) * b[j];
    b[i] = acc;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Complex acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= f.lu(ii, j) * b[j];
    b[ii] = acc / f.lu(ii, ii);
  }
  return b;
}

}  // namespace

ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b) {
  require(a.rows() == b.size(), "lu_solve dimension mismatch");
  return lu_apply(lu_factor(a), b);
}

ComplexMatrix lu_inverse(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  const Lu f = lu_factor(a);
  ComplexMatrix inv(n, n);
  ComplexVector e(n, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const ComplexVector col = lu_apply(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

double spectral_radius_estimate(const ComplexMatrix& a) {
  require(a.rows() == a.cols(), "spectral radius requires a square matrix");
  if (a.rows() == 0) return 0.0;
  // Gelfand: ||A^m||^(1/m) -> rho from above; repeated squaring with rescale,
  // best (smallest) level wins. Every level is a valid upper bound.
  ComplexMatrix p = a;
  double log_scale = 0.0;  // log ||A^(2^k)|| - log ||p||, accumulated per level
  double best = p.norm();
  if (best == 0.0) return 0.0;
  double inv_m = 1.0;
  for (int level = 0; level < 12; ++level) {
    const double s = p.max_abs();
    if (s == 0.0) return 0.0;
    p *= Complex{1.0 / s, 0.0};
    log_scale = 2.0 * (log_scale + std::log(s));
    p = p * p;
    inv_m *= 0.5;
    const double est = std::exp((log_scale + std::log(p.norm())) * inv_m);
    best = std::min(best, est);
  }
  return best;
}

LeastSquaresResult least_squares(const ComplexMatrix& m, const ComplexVector& rhs) {
  const std::size_t rows = m.rows(), cols = m.cols();
  require(rows >= cols && cols >= 1, "least_squares requires rows >= cols >= 1");
  require(rhs.size() == rows, "least_squares rhs length mismatch");
  require(m.all_finite() && all_finite(rhs), "least_squares requires finite input");

  // Householder QR, applied to [m | rhs]
  ComplexMatrix a = m;
  ComplexVector y = rhs;
  RealVector beta(cols, 0.0);
  std::vector<ComplexVector> reflectors(cols);

  for (std::size_t k = 0; k < cols; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k; i < rows; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    ComplexVector v(rows - k, Complex{0.0, 0.0});
    if (xnorm > 0.0) {
      const Complex x0 = a(k, k);
      const double ax0 = std::abs(x0);
      const Complex phase = ax0 > 0.0 ? x0 / ax0 : Complex{1.0, 0.0};
      const Complex alpha = -phase * xnorm;
      for (std::size_t i = k; i < rows; ++i) v[i - k] = a(i, k);
      v[0] -= alpha;
      double vnorm2 = 0.0;
      for (const auto& z : v) vnorm2 += std::norm(z);
      if (vnorm2 > 0.0) {
        const double b = 2.0 / vnorm2;
        beta[k] = b;
        for (std::size_t j = k; j < cols; ++j) {
          Complex s{0.0, 0.0};
          for (std::size_t i = k; i < rows; ++i) s += std::conj(v[i - k]) * a(i, j);
          s *= b;
          for (std::size_t i = k; i < rows; ++i) a(i, j) -= s * v[i - k];
        }
        Complex s{0.0, 0.0};
        for (std::size_t i = k; i < rows; ++i) s += std::conj(v[i - k]) * y[i];
        s *= b;
        for (std::size_t i = k; i < rows; ++i) y[i] -= s * v[i - k];
      }
      a(k, k) = alpha;
      for (std::size_t i = k + 1; i < rows; ++i) a(i, k) = 0.0;
    }
    reflectors[k] = std::move(v);
  }

  double rmax = 0.0;
  for (std::size_t k = 0; k < cols; ++k) rmax = std::max(rmax, std::abs(a(k, k)));
  const double rank_tol = rmax * 1e-12;
  bool deficient = rmax == 0.0;
  for (std::size_t k = 0; k < cols && !deficient; ++k)
    if (std::abs(a(k, k)) <= rank_tol) deficient = true;

  LeastSquaresResult res;
  if (!deficient) {
    res.x.assign(cols, Complex{0.0, 0.0});
    for (std::size_t kk = cols; kk-- > 0;) {
      Complex acc = y[kk];
      for (std::size_t j = kk + 1; j < cols; ++j) acc -= a(kk, j) * res.x[j];
      res.x[kk] = acc / a(kk, kk);
    }
    res.effective_rank = cols;
    double rn = 0.0;
    for (std::size_t i = cols; i < rows; ++i) rn += std::norm(y[i]);
    res.residual_norm = std::sqrt(rn);
    return res;
  }

  // minimum-norm solution through the SVD
  const SvdResult s = svd(m);
  const double tol = (s.singular_values.empty() ? 0.0 : s.singular_values[0]) * 1e-12;
  res.rank_deficient = true;
  res.x.assign(cols, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < s.singular_values.size(); ++k) {
    if (s.singular_values[k] <= tol) break;
    ++res.effective_rank;
    Complex coef{0.0, 0.0};
    for (std::size_t i = 0; i < rows; ++i) coef += std::conj(s.u(i, k)) * rhs[i];
    coef /= s.singular_values[k];
    for (std::size_t j = 0; j < cols; ++j) res.x[j] += coef * s.v(j, k);
  }
  ComplexVector r = m * res.x;
  for (std::size_t i = 0; i < rows; ++i) r[i] -= rhs[i];
  res.residual_norm = vector_norm(r);
  return res;
}

}  // namespace hlti
