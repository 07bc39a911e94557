#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlti {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

/// Row-major dense complex matrix. The workhorse container for every
/// dense object in the library (Gramians, Hankel blocks, realizations).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* row(std::size_t i) { return data_.data() + i * cols_; }
  const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }

  ComplexVector& data() { return data_; }
  const ComplexVector& data() const { return data_; }

  ComplexMatrix conj_transpose() const;
  ComplexMatrix transpose() const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexVector operator*(const ComplexVector& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix& operator*=(Complex scale);

  /// Frobenius norm.
  double norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

double vector_norm(const ComplexVector& v);
double vector_norm(const RealVector& v);
Complex dot_conj(const ComplexVector& a, const ComplexVector& b);  // a^* b
bool all_finite(const ComplexVector& v);

}  // namespace hlti
