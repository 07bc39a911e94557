#pragma once

#include <cstddef>

#include "hankel_lti/types.hpp"

namespace hlti {

enum class FftDirection { forward, inverse };

/// Precomputed transform of one fixed length. Power-of-two lengths run the
/// radix-2 path; every other length goes through a Bluestein chirp-z
/// embedding into the next sufficient power of two.
///
/// Forward is the plain DFT sum; inverse carries the 1/n factor, so
/// inverse(forward(x)) == x.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  ComplexVector forward(const ComplexVector& x) const;
  ComplexVector inverse(const ComplexVector& x) const;
  ComplexVector transform(const ComplexVector& x, FftDirection dir) const;

 private:
  void pow2_transform(ComplexVector& x, bool inverse_sign) const;
  ComplexVector bluestein(const ComplexVector& x) const;  // forward DFT, any length

  std::size_t n_ = 0;
  std::size_t m_ = 0;            // power-of-two working length
  bool is_pow2_ = false;
  ComplexVector twiddle_;        // radix-2 tables for length m_
  ComplexVector chirp_;          // exp(-i pi k^2 / n), k < n
  ComplexVector chirp_spectrum_; // forward transform of the padded conjugate chirp
};

/// One-shot convenience wrapper around FftPlan.
ComplexVector fft(const ComplexVector& x, FftDirection dir);

}  // namespace hlti
