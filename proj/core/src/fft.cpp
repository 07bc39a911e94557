#include "hankel_lti/fft.hpp"

#include <cmath>

namespace hlti {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  require(n >= 1, "FFT length must be at least 1");
  is_pow2_ = is_power_of_two(n);
  m_ = is_pow2_ ? n : next_power_of_two(2 * n - 1);

  twiddle_.resize(m_ / 2);
  for (std::size_t k = 0; k < m_ / 2; ++k)
    twiddle_[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(m_));

  if (!is_pow2_) {
    // chirp angles use k^2 mod 2n to keep the sin/cos argument small
    chirp_.resize(n_);
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % two_n;
      chirp_[k] = std::polar(1.0, -kPi * static_cast<double>(k2) / static_cast<double>(n_));
    }
    ComplexVector b(m_, Complex{0.0, 0.0});
    b[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n_; ++k) b[k] = b[m_ - k] = std::conj(chirp_[k]);
    pow2_transform(b, /*inverse_sign=*/false);
    chirp_spectrum_ = std::move(b);
  }
}

void FftPlan::pow2_transform(ComplexVector& x, bool inverse_sign) const {
  const std::size_t n = x.size();  // always m_, the table length
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddle_[k * stride];
        if (inverse_sign) w = std::conj(w);
        const Complex u = x[start + k];
        const Complex t = w * x[start + k + half];
        x[start + k] = u + t;
        x[start + k + half] = u - t;
      }
    }
  }
}

ComplexVector FftPlan::bluestein(const ComplexVector& x) const {
  ComplexVector a(m_, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n_; ++k) a[k] = x[k] * chirp_[k];
  pow2_transform(a, false);
  for (std::size_t k = 0; k < m_; ++k) a[k] *= chirp_spectrum_[k];
  pow2_transform(a, true);
  const double scale = 1.0 / static_cast<double>(m_);
  ComplexVector out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = a[k] * scale * chirp_[k];
  return out;
}

ComplexVector FftPlan::forward(const ComplexVector& x) const {
  require(x.size() == n_, "FFT input length does not match the plan");
  require(all_finite(x), "FFT input must be finite");
  if (is_pow2_) {
    ComplexVector y = x;
    pow2_transform(y, false);
    return y;
  }
  return bluestein(x);
}

ComplexVector FftPlan::inverse(const ComplexVector& x) const {
  require(x.size() == n_, "FFT input length does not match the plan");
  require(all_finite(x), "FFT input must be finite");
  const double scale = 1.0 / static_cast<double>(n_);
  if (is_pow2_) {
    ComplexVector y = x;
    pow2_transform(y, true);
    for (auto& z : y) z *= scale;
    return y;
  }
  // conj -> forward -> conj carries the sign flip through the chirp path
  ComplexVector y(n_);
  for (std::size_t k = 0; k < n_; ++k) y[k] = std::conj(x[k]);
  y = bluestein(y);
  for (auto& z : y) z = std::conj(z) * scale;
  return y;
}

ComplexVector FftPlan::transform(const ComplexVector& x, FftDirection dir) const {
  return dir == FftDirection::forward ? forward(x) : inverse(x);
}

ComplexVector fft(const ComplexVector& x, FftDirection dir) {
  FftPlan plan(x.size());
  return plan.transform(x, dir);
}

}  // namespace hlti
