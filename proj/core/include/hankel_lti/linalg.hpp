#pragma once

#include <cstddef>

#include "hankel_lti/types.hpp"

namespace hlti {

struct SvdResult {
  ComplexMatrix u;                  // rows x k, orthonormal columns
  RealVector singular_values;       // length k, nonincreasing
  ComplexMatrix v;                  // cols x k, orthonormal columns
};

/// Thin SVD via one-sided Jacobi on columns, k = min(rows, cols).
SvdResult svd(const ComplexMatrix& m);

/// Singular values only (skips the V accumulation).
RealVector singular_values(const ComplexMatrix& m);

struct EigenResult {
  RealVector eigenvalues;      // nondecreasing
  ComplexMatrix eigenvectors;  // unitary, column j pairs with eigenvalue j
};

/// Hermitian eigendecomposition: Householder tridiagonalization followed by
/// implicit-shift QL on the real tridiagonal form. Rejects input whose
/// Hermitian defect max|M - M^*| exceeds 1e-12 * max|M|.
EigenResult hermitian_eigen(const ComplexMatrix& m);

struct LeastSquaresResult {
  ComplexVector x;
  double residual_norm = 0.0;
  std::size_t effective_rank = 0;
  bool rank_deficient = false;
};

/// minimize ||M x - rhs||_2 for rows >= cols via Householder QR.
/// Rank-deficient systems fall back to the SVD minimum-norm solution and
/// report the effective rank.
LeastSquaresResult least_squares(const ComplexMatrix& m, const ComplexVector& rhs);

/// Solve A x = b by LU with partial pivoting (square A).
ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b);

/// Dense inverse via LU; used by the bilinear transform on small systems.
ComplexMatrix lu_inverse(const ComplexMatrix& a);

/// rho(A) estimate from norms of repeated squarings; an upper-bound flavored
/// estimate adequate for stability validation of small dense systems.
double spectral_radius_estimate(const ComplexMatrix& a);

}  // namespace hlti
