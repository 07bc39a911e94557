#include <benchmark/benchmark.h>

#include "hankel_lti/fft.hpp"
#include "hankel_lti/hankel.hpp"
#include "hankel_lti/hope.hpp"
#include "hankel_lti/init_schemes.hpp"
#include "hankel_lti/linalg.hpp"
#include "hankel_lti/rng.hpp"

using namespace hlti;

namespace {

ComplexVector random_vector(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  ComplexVector v(n);
  for (auto& z : v) z = rng.next_complex_gaussian();
  return v;
}

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.next_complex_gaussian();
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
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

void BM_fft(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const FftPlan plan(n);
  const ComplexVector x = random_vector(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(plan.forward(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fft)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_fft_bluestein(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const FftPlan plan(n);
  const ComplexVector x = random_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(plan.forward(x));
}
BENCHMARK(BM_fft_bluestein)->Arg(96)->Arg(1000);

void BM_svd(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const ComplexMatrix m = random_matrix(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(m));
}
BENCHMARK(BM_svd)->Arg(16)->Arg(64)->Arg(128);

void BM_hermitian_eigen(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const ComplexMatrix m = random_hermitian(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_hermitian_eigen)->Arg(64)->Arg(256);

void BM_hsvd_gamma2(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  Gamma2Config cfg;
  cfg.n = n;
  cfg.seed = 5;
  const DiagonalContinuousSystem sys = sample_gamma2(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(hsvd(sys));
}
BENCHMARK(BM_hsvd_gamma2)->Arg(64)->Arg(128);

void BM_hsvd_markov(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  SeededRng rng(6);
  const MarkovParams p = sample_markov(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hsvd_markov(p.h));
}
BENCHMARK(BM_hsvd_markov)->Arg(64)->Arg(256);

void BM_hope_forward(benchmark::State& state) {
  const std::size_t len = std::size_t(state.range(0));
  const std::size_t n = 64;
  SeededRng rng(7);
  const MarkovParams p = sample_markov(n, rng);
  const KernelPlan plan(n, len, 0.1, KernelMode::causal);
  const ComplexVector u = random_vector(len, 8);
  for (auto _ : state) benchmark::DoNotOptimize(hope_forward(p, u, plan));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_hope_forward)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_recurrence(benchmark::State& state) {
  const std::size_t len = std::size_t(state.range(0));
  SeededRng rng(9);
  const DiagonalContinuousSystem cont = s4d_legs_diag(64, rng);
  const DiagonalDiscreteSystem disc = bilinear_forward(time_scale(cont, 0.1));
  const ComplexVector u = random_vector(len, 10);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_recurrence(disc, u));
}
BENCHMARK(BM_recurrence)->Arg(256)->Arg(1024)->Arg(4096);

void BM_ho_kalman(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const ComplexVector h = random_vector(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(ho_kalman(h, 1e-10));
}
BENCHMARK(BM_ho_kalman)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
