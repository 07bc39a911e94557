#pragma once

#include <cstddef>
#include <span>

#include "hankel_lti/types.hpp"

namespace hlti {

/// SISO continuous-time system x' = diag(a) x + b u, y = c^T x + d u.
/// Stability (Re a_j < 0) is enforced on validate().
struct DiagonalContinuousSystem {
  ComplexVector a;
  ComplexVector b;
  ComplexVector c;
  Complex d{0.0, 0.0};

  std::size_t order() const { return a.size(); }
  void validate() const;
};

/// SISO discrete-time recurrence x_{k+1} = diag(a) x_k + b u_k, y = c^T x + d u.
/// Stability: |a_j| < 1.
struct DiagonalDiscreteSystem {
  ComplexVector a;
  ComplexVector b;
  ComplexVector c;
  Complex d{0.0, 0.0};

  std::size_t order() const { return a.size(); }
  void validate() const;
};

enum class TimeDomain { continuous, discrete };

/// Small dense SISO realization; holds HiPPO-LegS matrices and the systems
/// recovered from Hankel factorizations.
struct DenseStateSpace {
  ComplexMatrix a;
  ComplexVector b;
  ComplexVector c;
  Complex d{0.0, 0.0};
  TimeDomain domain = TimeDomain::continuous;

  std::size_t order() const { return a.rows(); }
  /// Stability per the time-domain flag, via a spectral-radius/abscissa
  /// estimate. Cheap screen, not a proof; diagonal systems validate exactly.
  void validate_stability() const;
};

// -- bilinear transform (unit step) --
// Abar = (I+A)(I-A)^-1, Bbar = (I+Abar)B/sqrt(2), Cbar = C(I+Abar)/sqrt(2),
// Dbar = D + Cbar (I+Abar)^-1 Bbar.
DiagonalDiscreteSystem bilinear_forward(const DiagonalContinuousSystem& sys);
DiagonalContinuousSystem bilinear_inverse(const DiagonalDiscreteSystem& sys);
DenseStateSpace bilinear_forward(const DenseStateSpace& sys);
DenseStateSpace bilinear_inverse(const DenseStateSpace& sys);

// -- transfer functions --
// Continuous G(s) = sum_j b_j c_j / (s - a_j) + d; discrete analog in z.
ComplexVector transfer_continuous(const DiagonalContinuousSystem& sys, std::span<const Complex> s);
ComplexVector transfer_discrete(const DiagonalDiscreteSystem& sys, std::span<const Complex> z);
/// Dense evaluation via an LU solve per point.
ComplexVector transfer_dense(const DenseStateSpace& sys, std::span<const Complex> points);

Complex transfer_continuous_at(const DiagonalContinuousSystem& sys, Complex s);
Complex transfer_discrete_at(const DiagonalDiscreteSystem& sys, Complex z);
Complex transfer_dense_at(const DenseStateSpace& sys, Complex point);

// -- time-domain simulation --
ComplexVector simulate_recurrence(const DiagonalDiscreteSystem& sys, const ComplexVector& u,
                                  const ComplexVector& x0 = {});
ComplexVector simulate_recurrence(const DenseStateSpace& sys, const ComplexVector& u,
                                  const ComplexVector& x0 = {});

/// G(s) -> G(s / dt), realized as (dt*A, dt*B, C, D).
DiagonalContinuousSystem time_scale(const DiagonalContinuousSystem& sys, double dt);
DenseStateSpace time_scale(const DenseStateSpace& sys, double dt);

/// |y_k| for the unit-impulse input, k = 0..length-1.
RealVector impulse_response(const DiagonalDiscreteSystem& sys, std::size_t length);
RealVector impulse_response(const DenseStateSpace& sys, std::size_t length);

/// Markov parameters C A^k B of a dense discrete realization, k = 0..count-1.
ComplexVector dense_markov_parameters(const DenseStateSpace& sys, std::size_t count);

}  // namespace hlti
