#include "hankel_lti/state_space.hpp"

#include <cmath>

#include "hankel_lti/linalg.hpp"

namespace hlti {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void check_siso_shape(std::size_t n, std::size_t nb, std::size_t nc) {
  require(n >= 1, "system order must be at least 1");
  require(nb == n && nc == n, "a, b, c must share the same length");
}

}  // namespace

void DiagonalContinuousSystem::validate() const {
  check_siso_shape(a.size(), b.size(), c.size());
  require(all_finite(a) && all_finite(b) && all_finite(c), "system entries must be finite");
  for (const auto& aj : a)
    require(aj.real() < 0.0, "continuous system is not asymptotically stable (Re a_j >= 0)");
}

void DiagonalDiscreteSystem::validate() const {
  check_siso_shape(a.size(), b.size(), c.size());
  require(all_finite(a) && all_finite(b) && all_finite(c), "system entries must be finite");
  for (const auto& aj : a)
    require(std::abs(aj) < 1.0, "discrete system is not asymptotically stable (|a_j| >= 1)");
}

void DenseStateSpace::validate_stability() const {
  require(a.rows() == a.cols() && a.rows() >= 1, "dense system matrix must be square");
  require(b.size() == a.rows() && c.size() == a.rows(), "b, c must match the system order");
  if (domain == TimeDomain::discrete) {
    require(spectral_radius_estimate(a) < 1.0, "dense discrete system fails the stability screen");
  } else {
    double max_re = -1e300;
    for (std::size_t i = 0; i < a.rows(); ++i) max_re = std::max(max_re, a(i, i).real());
    bool triangular = true;
    for (std::size_t i = 0; i < a.rows() && triangular; ++i)
      for (std::size_t j = i + 1; j < a.cols(); ++j)
        if (a(i, j) != Complex{0.0, 0.0}) {
          triangular = false;
          break;
        }
    if (triangular) {
      require(max_re < 0.0, "dense continuous triangular system has a nonnegative eigenvalue");
    } else {
      // spectral abscissa screen through the bilinear image
      const DenseStateSpace disc = bilinear_forward(*this);
      require(spectral_radius_estimate(disc.a) < 1.0,
              "dense continuous system fails the stability screen");
    }
  }
}

DiagonalDiscreteSystem bilinear_forward(const DiagonalContinuousSystem& sys) {
  sys.validate();
  const std::size_t n = sys.order();
  DiagonalDiscreteSystem out;
  out.a.resize(n);
  out.b.resize(n);
  out.c.resize(n);
  Complex feed{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex one_minus = 1.0 - sys.a[j];
    require(std::abs(one_minus) > 0.0, "bilinear transform hit a singular (I - A)");
    const Complex abar = (1.0 + sys.a[j]) / one_minus;
    const Complex scale = (1.0 + abar) / kSqrt2;
    out.a[j] = abar;
    out.b[j] = scale * sys.b[j];
    out.c[j] = sys.c[j] * scale;
    feed += out.c[j] * out.b[j] / (1.0 + abar);
  }
  out.d = sys.d + feed;
  return out;
}

DiagonalContinuousSystem bilinear_inverse(const DiagonalDiscreteSystem& sys) {
  sys.validate();
  const std::size_t n = sys.order();
  DiagonalContinuousSystem out;
  out.a.resize(n);
  out.b.resize(n);
  out.c.resize(n);
  Complex feed{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex one_plus = 1.0 + sys.a[j];
    require(std::abs(one_plus) > 0.0, "inverse bilinear transform hit a singular (I + A)");
    out.a[j] = (sys.a[j] - 1.0) / one_plus;
    out.b[j] = kSqrt2 * sys.b[j] / one_plus;
    out.c[j] = kSqrt2 * sys.c[j] / one_plus;
    feed += sys.c[j] * sys.b[j] / one_plus;
  }
  out.d = sys.d - feed;
  return out;
}

DenseStateSpace bilinear_forward(const DenseStateSpace& sys) {
  require(sys.domain == TimeDomain::continuous, "bilinear_forward expects a continuous system");
  const std::size_t n = sys.order();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix i_minus = eye - sys.a;
  ComplexMatrix i_plus = eye + sys.a;
  const ComplexMatrix inv_minus = lu_inverse(i_minus);
  DenseStateSpace out;
  out.domain = TimeDomain::discrete;
  out.a = i_plus * inv_minus;
  const ComplexMatrix i_plus_abar = eye + out.a;
  ComplexVector bb = i_plus_abar * sys.b;
  for (auto& z : bb) z /= kSqrt2;
  out.b = std::move(bb);
  // c^T (I + Abar) / sqrt2  ==  (I + Abar)^T c / sqrt2
  ComplexVector cc = i_plus_abar.transpose() * sys.c;
  for (auto& z : cc) z /= kSqrt2;
  out.c = std::move(cc);
  const ComplexVector t = lu_solve(i_plus_abar, out.b);
  Complex feed{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) feed += out.c[i] * t[i];
  out.d = sys.d + feed;
  return out;
}

DenseStateSpace bilinear_inverse(const DenseStateSpace& sys) {
  require(sys.domain == TimeDomain::discrete, "bilinear_inverse expects a discrete system");
  const std::size_t n = sys.order();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix i_plus = eye + sys.a;
  const ComplexMatrix inv_plus = lu_inverse(i_plus);
  DenseStateSpace out;
  out.domain = TimeDomain::continuous;
  out.a = (sys.a - eye) * inv_plus;
  ComplexVector bb = inv_plus * sys.b;
  for (auto& z : bb) z *= kSqrt2;
  out.b = std::move(bb);
  ComplexVector cc = inv_plus.transpose() * sys.c;
  for (auto& z : cc) z *= kSqrt2;
  out.c = std::move(cc);
  const ComplexVector t = inv_plus * sys.b;
  Complex feed{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) feed += sys.c[i] * t[i];
  out.d = sys.d - feed;
  return out;
}

Complex transfer_continuous_at(const DiagonalContinuousSystem& sys, Complex s) {
  Complex acc = sys.d;
  for (std::size_t j = 0; j < sys.order(); ++j) {
    const Complex den = s - sys.a[j];
    require(std::abs(den) > 0.0, "transfer function evaluated at a pole");
    acc += sys.b[j] * sys.c[j] / den;
  }
  return acc;
}

Complex transfer_discrete_at(const DiagonalDiscreteSystem& sys, Complex z) {
  Complex acc = sys.d;
  for (std::size_t j = 0; j < sys.order(); ++j) {
    const Complex den = z - sys.a[j];
    require(std::abs(den) > 0.0, "transfer function evaluated at a pole");
    acc += sys.b[j] * sys.c[j] / den;
  }
  return acc;
}

Complex transfer_dense_at(const DenseStateSpace& sys, Complex point) {
  const std::size_t n = sys.order();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? point : Complex{0.0, 0.0}) - sys.a(i, j);
  const ComplexVector x = lu_solve(m, sys.b);
  Complex acc = sys.d;
  for (std::size_t i = 0; i < n; ++i) acc += sys.c[i] * x[i];
  return acc;
}

ComplexVector transfer_continuous(const DiagonalContinuousSystem& sys, std::span<const Complex> s) {
  ComplexVector out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = transfer_continuous_at(sys, s[i]);
  return out;
}

ComplexVector transfer_discrete(const DiagonalDiscreteSystem& sys, std::span<const Complex> z) {
  ComplexVector out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = transfer_discrete_at(sys, z[i]);
  return out;
}

ComplexVector transfer_dense(const DenseStateSpace& sys, std::span<const Complex> points) {
  ComplexVector out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = transfer_dense_at(sys, points[i]);
  return out;
}

ComplexVector simulate_recurrence(const DiagonalDiscreteSystem& sys, const ComplexVector& u,
                                  const ComplexVector& x0) {
  require(!u.empty(), "simulate_recurrence needs at least one input sample");
  const std::size_t n = sys.order();
  ComplexVector x = x0.empty() ? ComplexVector(n, Complex{0.0, 0.0}) : x0;
  require(x.size() == n, "initial state length mismatch");
  ComplexVector y(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    Complex out = sys.d * u[k];
    for (std::size_t j = 0; j < n; ++j) out += sys.c[j] * x[j];
    y[k] = out;
    for (std::size_t j = 0; j < n; ++j) x[j] = sys.a[j] * x[j] + sys.b[j] * u[k];
  }
  return y;
}

ComplexVector simulate_recurrence(const DenseStateSpace& sys, const ComplexVector& u,
                                  const ComplexVector& x0) {
  require(sys.domain == TimeDomain::discrete, "simulate_recurrence expects a discrete system");
  require(!u.empty(), "simulate_recurrence needs at least one input sample");
  const std::size_t n = sys.order();
  ComplexVector x = x0.empty() ? ComplexVector(n, Complex{0.0, 0.0}) : x0;
  require(x.size() == n, "initial state length mismatch");
  ComplexVector y(u.size());
  ComplexVector xn(n);
  for (std::size_t k = 0; k < u.size(); ++k) {
    Complex out = sys.d * u[k];
    for (std::size_t j = 0; j < n; ++j) out += sys.c[j] * x[j];
    y[k] = out;
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      const Complex* arow = sys.a.row(i);
      for (std::size_t j = 0; j < n; ++j) acc += arow[j] * x[j];
      xn[i] = acc + sys.b[i] * u[k];
    }
    std::swap(x, xn);
  }
  return y;
}

DiagonalContinuousSystem time_scale(const DiagonalContinuousSystem& sys, double dt) {
  require(dt > 0.0, "time_scale requires dt > 0");
  DiagonalContinuousSystem out = sys;
  for (auto& z : out.a) z *= dt;
  for (auto& z : out.b) z *= dt;
  return out;
}

DenseStateSpace time_scale(const DenseStateSpace& sys, double dt) {
  require(dt > 0.0, "time_scale requires dt > 0");
  require(sys.domain == TimeDomain::continuous, "time_scale applies to continuous systems");
  DenseStateSpace out = sys;
  out.a *= Complex{dt, 0.0};
  for (auto& z : out.b) z *= dt;
  return out;
}

RealVector impulse_response(const DiagonalDiscreteSystem& sys, std::size_t length) {
  require(length >= 1, "impulse_response needs length >= 1");
  ComplexVector u(length, Complex{0.0, 0.0});
  u[0] = 1.0;
  const ComplexVector y = simulate_recurrence(sys, u);
  RealVector mag(length);
  for (std::size_t k = 0; k < length; ++k) mag[k] = std::abs(y[k]);
  return mag;
}

RealVector impulse_response(const DenseStateSpace& sys, std::size_t length) {
  require(length >= 1, "impulse_response needs length >= 1");
  ComplexVector u(length, Complex{0.0, 0.0});
  u[0] = 1.0;
  const ComplexVector y = simulate_recurrence(sys, u);
  RealVector mag(length);
  for (std::size_t k = 0; k < length; ++k) mag[k] = std::abs(y[k]);
  return mag;
}

ComplexVector dense_markov_parameters(const DenseStateSpace& sys, std::size_t count) {
  const std::size_t n = sys.order();
  ComplexVector v = sys.b;
  ComplexVector out(count);
  ComplexVector vn(n);
  for (std::size_t k = 0; k < count; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += sys.c[i] * v[i];
    out[k] = acc;
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{0.0, 0.0};
      const Complex* arow = sys.a.row(i);
      for (std::size_t j = 0; j < n; ++j) s += arow[j] * v[j];
      vn[i] = s;
    }
    std::swap(v, vn);
  }
  return out;
}

}  // namespace hlti
