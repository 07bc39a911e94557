#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hankel_lti/fft.hpp"
#include "hankel_lti/state_space.hpp"
#include "hankel_lti/types.hpp"

namespace hlti {

/// LTI layer parameterized by the Markov parameters of its Hankel operator:
/// n complex numbers h plus the feedthrough d. A diagonal (A, B, C) layer of
/// the same order carries 3n.
struct MarkovParams {
  ComplexVector h;
  Complex d{0.0, 0.0};

  std::size_t order() const { return h.size(); }
  std::size_t lti_parameter_count() const { return h.size(); }
};

/// Gbar(z) = sum_{j<n} h_j z^{-j-1} + d, Horner in 1/z.
Complex transfer_markov_at(const MarkovParams& params, Complex z);
ComplexVector transfer_markov(const MarkovParams& params, std::span<const Complex> z);

enum class KernelMode {
  paper_exact,  // length-L circular pipeline
  causal        // zero-padded linear convolution, wraparound suppressed
};

/// Precomputed forward-pass state: the relocated unit-circle samplers
/// omega^(M, dt) with s_j = (omega_j - 1)/(omega_j + 1) and
/// omega_j^(M, dt) = (1 + s_j/dt)/(1 - s_j/dt), plus the FFT plan of the
/// transform length. dt = 1 reproduces the M-th roots of unity exactly.
///
/// Causal mode pads to 2L at dt = 1 (the kernel support is finite there);
/// for dt != 1 the realized kernel has an infinite tail and the transform
/// grows to 4L so the wraparound stays below 1e-10 at the tested scales.
class KernelPlan {
 public:
  KernelPlan(std::size_t order, std::size_t seq_len, double dt, KernelMode mode);

  std::size_t order() const { return order_; }
  std::size_t seq_len() const { return seq_len_; }
  double dt() const { return dt_; }
  KernelMode mode() const { return mode_; }
  std::size_t transform_length() const { return omega_.size(); }
  const ComplexVector& sampler_points() const { return omega_; }
  const FftPlan& fft_plan() const { return fft_; }

 private:
  std::size_t order_;
  std::size_t seq_len_;
  double dt_;
  KernelMode mode_;
  ComplexVector omega_;
  FftPlan fft_;
};

/// y = iFFT(FFT(u) o Gbar(omega^(M,dt))) + d u. Causal mode zero-pads and
/// keeps the first L outputs.
ComplexVector hope_forward(const MarkovParams& params, const ComplexVector& u,
                           const KernelPlan& plan);

/// SVD realization of the n x n Hankel block: O = U S^{1/2}; the shift
/// equation includes the known zero row below the anti-triangular block, so
/// full-rank inputs realize the finite kernel exactly (nilpotent A).
struct HoKalmanResult {
  DenseStateSpace system;  // discrete
  std::size_t realized_order = 0;
  double markov_error = 0.0;       // max |C A^j B - h_j| over j <= n-2
  double last_markov_error = 0.0;  // error on h_{n-1}
};

HoKalmanResult ho_kalman(const ComplexVector& h, double rank_tol);

/// Gradient descent on the quadratic kernel-matching loss
/// L(h) = 1/2 ||k(h) - k(target)||^2 (the padded causal kernel is h itself,
/// so grad = h - target). Tracks the transfer-function envelope
/// sqrt(n) ||h_step - target|| along the trajectory.
struct FitRecord {
  std::size_t step = 0;
  double loss = 0.0;
  double envelope = 0.0;       // sqrt(n) ||h - target||
  double transfer_gap = 0.0;   // grid-estimated ||G - G_target||_inf
};

struct FitResult {
  MarkovParams params;
  std::vector<FitRecord> trajectory;
  bool diverged = false;
  std::size_t steps_taken = 0;
};

FitResult fit_markov(const ComplexVector& target, const MarkovParams& initial, double lr,
                     std::size_t steps, std::size_t record_every = 25);

}  // namespace hlti
