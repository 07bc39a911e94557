#include <algorithm>
#include <cmath>
#include <numeric>

#include "hankel_lti/linalg.hpp"

namespace hlti {

namespace {

// One-sided Jacobi on columns. Rotations orthogonalize column pairs of W;
// at convergence sigma_j = ||w_j|| and U is W with columns normalized.
// V accumulates the rotations when requested.
struct JacobiState {
  std::vector<ComplexVector> w;  // columns, length rows
  std::vector<ComplexVector> v;  // columns, length cols (empty if not wanted)
  RealVector norms2;
};

void jacobi_sweeps(JacobiState& st) {
  const std::size_t n = st.w.size();
  if (n < 2) return;
  const double tol = 1e-14;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (const auto& z : st.w[j]) acc += std::norm(z);
      st.norms2[j] = acc;
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double a = st.norms2[p], b = st.norms2[q];
        if (a == 0.0 || b == 0.0) continue;
        Complex g{0.0, 0.0};
        {
          const Complex* wp = st.w[p].data();
          const Complex* wq = st.w[q].data();
          const std::size_t m = st.w[p].size();
          for (std::size_t i = 0; i < m; ++i) g += std::conj(wp[i]) * wq[i];
        }
        const double ag = std::abs(g);
        if (ag <= tol * std::sqrt(a * b)) continue;
        rotated = true;
        const Complex phase = g / ag;
        const double zeta = (b - a) / (2.0 * ag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * phase;              // applied as e^{+i phi}
        const Complex sm = s * std::conj(phase);   // e^{-i phi}
        {
          Complex* wp = st.w[p].data();
          Complex* wq = st.w[q].data();
          const std::size_t m = st.w[p].size();
          for (std::size_t i = 0; i < m; ++i) {
            const Complex xp = wp[i], xq = wq[i];
            wp[i] = c * xp - sm * xq;
            wq[i] = sp * xp + c * xq;
          }
        }
        if (!st.v.empty()) {
          Complex* vp = st.v[p].data();
          Complex* vq = st.v[q].data();
          const std::size_t m = st.v[p].size();
          for (std::size_t i = 0; i < m; ++i) {
            const Complex xp = vp[i], xq = vq[i];
            vp[i] = c * xp - sm * xq;
            vq[i] = sp * xp + c * xq;
          }
        }
        st.norms2[p] = a * c * c + b * s * s - 2.0 * c * s * ag;
        st.norms2[q] = a * s * s + b * c * c + 2.0 * c * s * ag;
      }
    }
    if (!rotated) break;
  }
}

JacobiState run_jacobi(const ComplexMatrix& m, bool want_v) {
  const std::size_t rows = m.rows(), cols = m.cols();
  JacobiState st;
  st.w.assign(cols, ComplexVector(rows));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) st.w[j][i] = m(i, j);
  if (want_v) {
    st.v.assign(cols, ComplexVector(cols, Complex{0.0, 0.0}));
    for (std::size_t j = 0; j < cols; ++j) st.v[j][j] = 1.0;
  }
  st.norms2.assign(cols, 0.0);
  jacobi_sweeps(st);
  return st;
}

std::vector<std::size_t> descending_order(const RealVector& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
  return idx;
}

// Fill columns with sigma = 0 by Gram-Schmidt over canonical basis vectors.
void complete_basis(ComplexMatrix& u, std::size_t filled_from) {
  const std::size_t rows = u.rows(), k = u.cols();
  std::size_t cand = 0;
  for (std::size_t j = filled_from; j < k; ++j) {
    for (; cand <= rows; ++cand) {
      require(cand < rows, "failed to complete an orthonormal basis");
      ComplexVector e(rows, Complex{0.0, 0.0});
      e[cand] = 1.0;
      for (std::size_t jj = 0; jj < j; ++jj) {
        Complex proj{0.0, 0.0};
        for (std::size_t i = 0; i < rows; ++i) proj += std::conj(u(i, jj)) * e[i];
        for (std::size_t i = 0; i < rows; ++i) e[i] -= proj * u(i, jj);
      }
      const double nn = vector_norm(e);
      if (nn > 0.5) {  // canonical vector mostly outside the current span
        for (std::size_t i = 0; i < rows; ++i) u(i, j) = e[i] / nn;
        ++cand;
        break;
      }
    }
  }
}

}  // namespace

SvdResult svd(const ComplexMatrix& m) {
  require(m.rows() >= 1 && m.cols() >= 1, "svd requires a nonempty matrix");
  require(m.all_finite(), "svd requires finite entries");
  if (m.rows() < m.cols()) {
    // factor the conjugate transpose and swap the factors
    SvdResult t = svd(m.conj_transpose());
    return SvdResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  JacobiState st = run_jacobi(m, /*want_v=*/true);

  RealVector sig(cols);
  for (std::size_t j = 0; j < cols; ++j) sig[j] = vector_norm(st.w[j]);
  const auto order = descending_order(sig);

  SvdResult res;
  res.singular_values.resize(cols);
  res.u = ComplexMatrix(rows, cols);
  res.v = ComplexMatrix(cols, cols);
  // below this, a column is numerical noise; complete the basis instead of
  // normalizing a junk direction
  const double tiny = sig.empty() ? 0.0 : sig[order[0]] * 1e-15 * std::sqrt(double(rows));
  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    res.singular_values[j] = sig[src];
    for (std::size_t i = 0; i < cols; ++i) res.v(i, j) = st.v[src][i];
    if (sig[src] > tiny && sig[src] > 0.0) {
      const double inv = 1.0 / sig[src];
      for (std::size_t i = 0; i < rows; ++i) res.u(i, j) = st.w[src][i] * inv;
      ++nonzero;
    }
  }
  if (nonzero < cols) complete_basis(res.u, nonzero);
  return res;
}

RealVector singular_values(const ComplexMatrix& m) {
  require(m.rows() >= 1 && m.cols() >= 1, "singular_values requires a nonempty matrix");
  require(m.all_finite(), "singular_values requires finite entries");
  if (m.rows() < m.cols()) return singular_values(m.conj_transpose());
  JacobiState st = run_jacobi(m, /*want_v=*/false);
  RealVector sig(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) sig[j] = vector_norm(st.w[j]);
  std::sort(sig.begin(), sig.end(), std::greater<double>());
  return sig;
}

}  // namespace hlti
