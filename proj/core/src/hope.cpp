#include "hankel_lti/hope.hpp"

#include <cmath>

#include "hankel_lti/hankel.hpp"
#include "hankel_lti/hinf.hpp"
#include "hankel_lti/linalg.hpp"

namespace hlti {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Complex transfer_markov_at(const MarkovParams& params, Complex z) {
  require(params.order() >= 1, "transfer_markov needs at least one parameter");
  require(std::abs(z) > 0.0, "transfer_markov is singular at z = 0");
  const Complex iz = 1.0 / z;
  Complex acc{0.0, 0.0};
  for (std::size_t j = params.order(); j-- > 0;) acc = (acc + params.h[j]) * iz;
  return acc + params.d;
}

ComplexVector transfer_markov(const MarkovParams& params, std::span<const Complex> z) {
  ComplexVector out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = transfer_markov_at(params, z[i]);
  return out;
}

KernelPlan::KernelPlan(std::size_t order, std::size_t seq_len, double dt, KernelMode mode)
    : order_(order),
      seq_len_(seq_len),
      dt_(dt),
      mode_(mode),
      omega_(),
      fft_(mode == KernelMode::causal ? (dt == 1.0 ? 2 * seq_len : 4 * seq_len) : seq_len) {
  require(order >= 1 && seq_len >= 1, "KernelPlan needs order >= 1 and seq_len >= 1");
  require(dt > 0.0, "KernelPlan needs dt > 0");
  if (mode == KernelMode::paper_exact)
    require(seq_len >= order, "paper-exact mode needs seq_len >= order");

  const std::size_t m = fft_.size();
  omega_.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (j == 0) {
      omega_[j] = Complex{1.0, 0.0};
      continue;
    }
    if (2 * j == m) {
      // omega = -1 maps through s = infinity; the Mobius limit is -1 for any dt
      omega_[j] = Complex{-1.0, 0.0};
      continue;
    }
    const Complex w = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m));
    if (dt == 1.0) {
      omega_[j] = w;
      continue;
    }
    const Complex s = (w - 1.0) / (w + 1.0);
    omega_[j] = (1.0 + s / dt) / (1.0 - s / dt);
  }
}

ComplexVector hope_forward(const MarkovParams& params, const ComplexVector& u,
                           const KernelPlan& plan) {
  require(u.size() == plan.seq_len(), "input length does not match the plan");
  require(params.order() == plan.order(), "parameter order does not match the plan");
  const std::size_t m = plan.transform_length();

  const MarkovParams lti_only{params.h, Complex{0.0, 0.0}};
  ComplexVector kernel_hat(m);
  for (std::size_t j = 0; j < m; ++j)
    kernel_hat[j] = transfer_markov_at(lti_only, plan.sampler_points()[j]);

  ComplexVector padded(m, Complex{0.0, 0.0});
  std::copy(u.begin(), u.end(), padded.begin());
  ComplexVector spectrum = plan.fft_plan().forward(padded);
  for (std::size_t j = 0; j < m; ++j) spectrum[j] *= kernel_hat[j];
  ComplexVector y_full = plan.fft_plan().inverse(spectrum);

  ComplexVector y(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) y[k] = y_full[k] + params.d * u[k];
  return y;
}

HoKalmanResult ho_kalman(const ComplexVector& h, double rank_tol) {
  const std::size_t n = h.size();
  require(n >= 1, "ho_kalman needs at least one Markov parameter");
  require(rank_tol >= 0.0, "rank tolerance must be nonnegative");
  const ComplexMatrix hank = hankel_from_markov(h);
  require(hank.max_abs() > 0.0, "ho_kalman rejects the zero Hankel matrix");

  const SvdResult s = svd(hank);
  std::size_t r = 0;
  for (const double sv : s.singular_values)
    if (sv > rank_tol * s.singular_values[0]) ++r;
  r = std::max<std::size_t>(r, 1);

  // O = U S^{1/2} (n x r); controllability factor S^{1/2} V^* (r x n)
  ComplexMatrix obs(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    const double root = std::sqrt(s.singular_values[j]);
    for (std::size_t i = 0; i < n; ++i) obs(i, j) = s.u(i, j) * root;
  }

  // Shift equation over the full block: rows 1..n-1 of O, then the row of
  // zeros that the anti-triangular truncation guarantees below the block.
  ComplexMatrix shifted(n, r);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < r; ++j) shifted(i, j) = obs(i + 1, j);

  DenseStateSpace sys;
  sys.domain = TimeDomain::discrete;
  sys.a = ComplexMatrix(r, r);
  sys.b.assign(r, Complex{0.0, 0.0});
  sys.c.assign(r, Complex{0.0, 0.0});
  sys.d = Complex{0.0, 0.0};

  // column-by-column least squares O a_col = shifted_col
  for (std::size_t col = 0; col < r; ++col) {
    ComplexVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = shifted(i, col);
    const LeastSquaresResult ls = least_squares(obs, rhs);
    for (std::size_t i = 0; i < r; ++i) sys.a(i, col) = ls.x[i];
  }
  for (std::size_t j = 0; j < r; ++j) {
    const double root = std::sqrt(s.singular_values[j]);
    sys.b[j] = root * std::conj(s.v(0, j));
    sys.c[j] = obs(0, j);
  }

  HoKalmanResult out;
  out.system = std::move(sys);
  out.realized_order = r;
  const ComplexVector markov = dense_markov_parameters(out.system, n);
  for (std::size_t j = 0; j + 1 < n; ++j)
    out.markov_error = std::max(out.markov_error, std::abs(markov[j] - h[j]));
  out.last_markov_error = std::abs(markov[n - 1] - h[n - 1]);
  return out;
}

FitResult fit_markov(const ComplexVector& target, const MarkovParams& initial, double lr,
                     std::size_t steps, std::size_t record_every) {
  require(!target.empty(), "fit_markov needs a nonempty target");
  require(initial.order() == target.size(), "initial parameters must match the target length");
  require(lr > 0.0, "fit_markov needs lr > 0");
  const std::size_t n = target.size();
  const double root_n = std::sqrt(static_cast<double>(n));

  GridSpec coarse;
  coarse.points_per_decade = 64;
  coarse.refine_iterations = 32;

  FitResult res;
  res.params = initial;
  auto record = [&](std::size_t step) {
    if (!res.trajectory.empty() && res.trajectory.back().step == step) return;
    double dist2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) dist2 += std::norm(res.params.h[j] - target[j]);
    FitRecord rec;
    rec.step = step;
    rec.loss = 0.5 * dist2;
    rec.envelope = root_n * std::sqrt(dist2);
    const MarkovParams tgt{target, Complex{0.0, 0.0}};
    const MarkovParams cur{res.params.h, Complex{0.0, 0.0}};
    const TransferFn f = [&](Complex z) { return transfer_markov_at(cur, z); };
    const TransferFn g = [&](Complex z) { return transfer_markov_at(tgt, z); };
    rec.transfer_gap = hinf_distance_circle(f, g, coarse).value;
    res.trajectory.push_back(rec);
  };

  record(0);
  double prev_loss = res.trajectory.front().loss;
  std::size_t rises = 0;
  for (std::size_t step = 1; step <= steps; ++step) {
    // grad of 1/2 ||h - target||^2
    double dist2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      res.params.h[j] -= lr * (res.params.h[j] - target[j]);
      dist2 += std::norm(res.params.h[j] - target[j]);
    }
    res.steps_taken = step;
    const double loss = 0.5 * dist2;
    if (loss > prev_loss) {
      if (++rises >= 10) {
        res.diverged = true;
        record(step);
        break;
      }
    } else {
      rises = 0;
    }
    prev_loss = loss;
    if (step % record_every == 0 || step == steps) record(step);
    if (loss < 1e-30) {
      record(step);
      break;
    }
  }
  return res;
}

}  // namespace hlti
