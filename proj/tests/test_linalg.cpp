#include <doctest.h>

#include <cmath>

#include "hankel_lti/linalg.hpp"
#include "hankel_lti/rng.hpp"

using namespace hlti;

namespace {

ComplexMatrix random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.next_complex_gaussian();
  return m;
}

ComplexMatrix random_hermitian(SeededRng& rng, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex{rng.next_gaussian(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = rng.next_complex_gaussian();
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

double orthonormality_defect(const ComplexMatrix& u) {
  double worst = 0.0;
  for (std::size_t a = 0; a < u.cols(); ++a)
    for (std::size_t b = 0; b < u.cols(); ++b) {
      Complex g{0.0, 0.0};
      for (std::size_t i = 0; i < u.rows(); ++i) g += std::conj(u(i, a)) * u(i, b);
      if (a == b) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

double reconstruction_error(const ComplexMatrix& m, const SvdResult& s) {
  ComplexMatrix us = s.u;
  for (std::size_t j = 0; j < s.singular_values.size(); ++j)
    for (std::size_t i = 0; i < us.rows(); ++i) us(i, j) *= s.singular_values[j];
  const ComplexMatrix rec = us * s.v.conj_transpose();
  return (m - rec).max_abs();
}

}  // namespace

TEST_CASE("svd of a diagonal matrix") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  const SvdResult s = svd(m);
  CHECK(s.singular_values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(s.singular_values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rank-1 outer product has one singular value") {
  const ComplexVector v{1.0, 0.5, 0.25};
  ComplexMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v[i] * v[j];
  const SvdResult s = svd(m);
  CHECK(std::abs(s.singular_values[0] - 1.3125) < 1e-12);
  CHECK(s.singular_values[1] < 1e-12);
  CHECK(s.singular_values[2] < 1e-12);
  CHECK(orthonormality_defect(s.u) < 1e-10);  // completed basis stays orthonormal
}

TEST_CASE("random square svd reconstructs the matrix") {
  SeededRng rng(5);
  const ComplexMatrix m = random_matrix(rng, 8, 8);
  const SvdResult s = svd(m);
  for (std::size_t j = 1; j < 8; ++j) CHECK(s.singular_values[j] <= s.singular_values[j - 1]);
  CHECK(reconstruction_error(m, s) < 1e-10 * s.singular_values[0]);
  CHECK(orthonormality_defect(s.u) < 1e-10);
  CHECK(orthonormality_defect(s.v) < 1e-10);
}

TEST_CASE("wide matrices factor through the transpose") {
  SeededRng rng(6);
  const ComplexMatrix m = random_matrix(rng, 4, 9);
  const SvdResult s = svd(m);
  CHECK(s.u.rows() == 4);
  CHECK(s.v.rows() == 9);
  CHECK(s.singular_values.size() == 4);
  CHECK(reconstruction_error(m, s) < 1e-10 * s.singular_values[0]);
}

TEST_CASE("singular values agree with the eigenvalues of M*M") {
  SeededRng rng(9);
  for (int rep = 0; rep < 4; ++rep) {
    const ComplexMatrix m = random_matrix(rng, 12, 12);
    const RealVector sv = singular_values(m);
    const EigenResult e = hermitian_eigen(m.conj_transpose() * m);
    for (std::size_t j = 0; j < 12; ++j) {
      const double from_eigen = std::sqrt(std::max(e.eigenvalues[11 - j], 0.0));
      CHECK(std::abs(sv[j] - from_eigen) <= 1e-9 * sv[0]);
    }
  }
}

TEST_CASE("hermitian eigen on simple fixtures") {
  ComplexMatrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 5.0;
  const EigenResult e1 = hermitian_eigen(d);
  CHECK(e1.eigenvalues[0] == doctest::Approx(2.0));
  CHECK(e1.eigenvalues[1] == doctest::Approx(5.0));

  ComplexMatrix pauli(2, 2);
  pauli(0, 1) = Complex{0.0, -1.0};
  pauli(1, 0) = Complex{0.0, 1.0};
  const EigenResult e2 = hermitian_eigen(pauli);
  CHECK(e2.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(e2.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("random hermitian eigen residuals") {
  SeededRng rng(12);
  const std::size_t n = 16;
  const ComplexMatrix m = random_hermitian(rng, n);
  const EigenResult e = hermitian_eigen(m);
  const double scale = m.norm();
  for (std::size_t j = 0; j < n; ++j) {
    ComplexVector v(n), mv(n, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) v[i] = e.eigenvectors(i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) mv[i] += m(i, k) * v[k];
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += std::norm(mv[i] - e.eigenvalues[j] * v[i]);
    CHECK(std::sqrt(r) <= 1e-10 * scale);
  }
  for (std::size_t j = 1; j < n; ++j) CHECK(e.eigenvalues[j] >= e.eigenvalues[j - 1]);
}

TEST_CASE("non-hermitian input is rejected with the defect") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  CHECK_THROWS_WITH_AS(hermitian_eigen(m), doctest::Contains("symmetry defect"),
                       std::invalid_argument);
}

TEST_CASE("least squares solves square and consistent systems exactly") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 3.0;
  const ComplexVector x_true{Complex{1.0, -1.0}, Complex{0.5, 2.0}};
  const ComplexVector rhs = m * x_true;
  const LeastSquaresResult r = least_squares(m, rhs);
  CHECK(std::abs(r.x[0] - x_true[0]) < 1e-13);
  CHECK(std::abs(r.x[1] - x_true[1]) < 1e-13);
  CHECK_FALSE(r.rank_deficient);

  // overdetermined but consistent
  SeededRng rng(4);
  const ComplexMatrix a = random_matrix(rng, 10, 3);
  const ComplexVector xt{1.0, 2.0, 3.0};
  const LeastSquaresResult r2 = least_squares(a, a * xt);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(r2.x[j] - xt[j]) < 1e-12);
  CHECK(r2.residual_norm < 1e-12);
}

TEST_CASE("least squares residual is orthogonal to the range") {
  SeededRng rng(21);
  const ComplexMatrix m = random_matrix(rng, 20, 5);
  ComplexVector rhs(20);
  for (auto& z : rhs) z = rng.next_complex_gaussian();
  const LeastSquaresResult r = least_squares(m, rhs);
  ComplexVector resid = m * r.x;
  for (std::size_t i = 0; i < 20; ++i) resid[i] -= rhs[i];
  // M^* resid = 0 within tolerance
  for (std::size_t j = 0; j < 5; ++j) {
    Complex g{0.0, 0.0};
    for (std::size_t i = 0; i < 20; ++i) g += std::conj(m(i, j)) * resid[i];
    CHECK(std::abs(g) < 1e-10 * vector_norm(rhs));
  }
}

TEST_CASE("rank-deficient systems report the effective rank") {
  SeededRng rng(31);
  ComplexMatrix m(6, 3);
  for (std::size_t i = 0; i < 6; ++i) {
    m(i, 0) = rng.next_complex_gaussian();
    m(i, 1) = 2.0 * m(i, 0);  // dependent column
    m(i, 2) = rng.next_complex_gaussian();
  }
  ComplexVector rhs(6);
  for (auto& z : rhs) z = rng.next_complex_gaussian();
  const LeastSquaresResult r = least_squares(m, rhs);
  CHECK(r.rank_deficient);
  CHECK(r.effective_rank == 2);
}

TEST_CASE("lu solve and inverse on a small system") {
  SeededRng rng(8);
  const ComplexMatrix a = random_matrix(rng, 5, 5);
  ComplexVector b(5);
  for (auto& z : b) z = rng.next_complex_gaussian();
  const ComplexVector x = lu_solve(a, b);
  const ComplexVector ax = a * x;
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(ax[i] - b[i]) < 1e-11);
  const ComplexMatrix id = a * lu_inverse(a);
  CHECK((id - ComplexMatrix::identity(5)).max_abs() < 1e-11);
}

TEST_CASE("spectral radius estimate brackets diagonal truth") {
  ComplexMatrix a(3, 3);
  a(0, 0) = Complex{0.5, 0.0};
  a(1, 1) = Complex{0.0, -0.8};
  a(2, 2) = Complex{0.1, 0.1};
  const double est = spectral_radius_estimate(a);
  CHECK(est == doctest::Approx(0.8).epsilon(1e-6));
  // nilpotent shift: estimate collapses toward zero
  ComplexMatrix nil(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) nil(i + 1, i) = 1.0;
  CHECK(spectral_radius_estimate(nil) < 1.0);
}
