#include <doctest.h>

#include <cmath>

#include "hankel_lti/experiments.hpp"
#include "hankel_lti/hinf.hpp"
#include "hankel_lti/perturbation.hpp"
#include "hankel_lti/rng.hpp"

using namespace hlti;

TEST_CASE("identical evaluators have distance zero") {
  const TransferFn f = [](Complex s) { return 1.0 / (s + 1.0); };
  CHECK(hinf_distance_axis(f, f, GridSpec{}).value == 0.0);
}

TEST_CASE("peak of 1/(s+1) sits at the origin") {
  const TransferFn f = [](Complex s) { return 1.0 / (s + 1.0); };
  const TransferFn zero = [](Complex) { return Complex{0.0, 0.0}; };
  const HinfEstimate est = hinf_distance_axis(f, zero, GridSpec{});
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(est.maximizer) < 1e-6);
}

TEST_CASE("pole-shift distance matches a dense-grid oracle") {
  const TransferFn f = [](Complex s) { return 1.0 / (s + 1.0); };
  const TransferFn g = [](Complex s) { return 1.0 / (s + 0.9); };
  const HinfEstimate est = hinf_distance_axis(f, g, GridSpec{});
  // dense independent evaluation around the known peak region
  double dense = 0.0;
  for (int i = -200000; i <= 200000; ++i) {
    const Complex s{0.0, i * 1e-5};
    dense = std::max(dense, std::abs(f(s) - g(s)));
  }
  CHECK(est.value >= dense - 1e-9);
  CHECK(est.value <= dense + 1e-9);
  CHECK(est.value == doctest::Approx(0.1 / 0.9).epsilon(1e-6));
}

TEST_CASE("circle-mode distance of polynomial kernels") {
  // G(z) = z^{-1}, Gt(z) = 0: sup over |z| = 1 is exactly 1
  const TransferFn f = [](Complex z) { return 1.0 / z; };
  const TransferFn zero = [](Complex) { return Complex{0.0, 0.0}; };
  CHECK(hinf_distance_circle(f, zero, GridSpec{}).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("grid spec validation") {
  GridSpec bad;
  bad.f_min = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  GridSpec bad2;
  bad2.points_per_decade = 1;
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("perturbation bound on the scalar fixture") {
  DiagonalContinuousSystem sys;
  sys.a = {Complex{-1.0, 0.0}};
  sys.b = {Complex{1.0, 0.0}};
  sys.c = {Complex{1.0, 0.0}};

  DiagonalContinuousSystem pert = sys;
  pert.a[0] = Complex{-1.0, 0.1};
  const PerturbationReport rep = verify_theorem2(sys, pert, 0.1, 0.0);
  CHECK(rep.bound == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(rep.measured <= rep.bound);
  CHECK(rep.measured > 0.05);  // the shift is visible

  const PerturbationReport zero_rep = verify_theorem2(sys, sys, 0.0, 0.0);
  CHECK(zero_rep.measured == 0.0);
  CHECK(zero_rep.bound == 0.0);
}

TEST_CASE("admissibility violations are reported with the index") {
  DiagonalContinuousSystem sys;
  sys.a = {Complex{-1.0, 0.0}, Complex{-2.0, 0.0}};
  sys.b = {Complex{1.0, 0.0}, Complex{1.0, 0.0}};
  sys.c = {Complex{1.0, 0.0}, Complex{1.0, 0.0}};
  DiagonalContinuousSystem pert = sys;
  pert.a[1] = Complex{-2.0, 0.3};
  CHECK_THROWS_WITH_AS(verify_theorem2(sys, pert, 0.1, 0.0), doctest::Contains("pole 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(verify_theorem2(sys, sys, 10.0, 0.0),
                       doctest::Contains("exceeds min |Re a_j| / 2"), std::invalid_argument);
  DiagonalContinuousSystem pert2 = sys;
  pert2.c[0] = Complex{5.0, 0.0};
  CHECK_THROWS_WITH_AS(verify_theorem2(sys, pert2, 0.0, 0.5), doctest::Contains("index 0"),
                       std::invalid_argument);
}

TEST_CASE("random admissible perturbations never break the bound") {
  SeededRng rng(61);
  for (int rep = 0; rep < 25; ++rep) {
    SeededRng trial = rng.split(rep);
    const DiagonalContinuousSystem sys = random_stable_system(trial, 16);
    double min_re = 1e300, min_bc = 1e300;
    for (std::size_t j = 0; j < 16; ++j) {
      min_re = std::min(min_re, std::abs(sys.a[j].real()));
      min_bc = std::min(min_bc, std::abs(sys.b[j] * sys.c[j]));
    }
    const double delta_a = 0.5 * min_re * trial.next_double();
    const double delta_b = min_bc * trial.next_double();
    DiagonalContinuousSystem pert = sys;
    for (std::size_t j = 0; j < 16; ++j) {
      pert.a[j] += std::polar(delta_a * trial.next_double(), trial.next_uniform(0.0, 6.28));
      const double shift =
          std::min(std::abs(sys.b[j] * sys.c[j]), delta_b) * trial.next_double();
      pert.c[j] += std::polar(shift, trial.next_uniform(0.0, 6.28)) / sys.b[j];
    }
    const PerturbationReport r = verify_theorem2(sys, pert, delta_a, delta_b);
    CHECK(r.measured <= r.bound);
  }
}

TEST_CASE("tightness constructions reach their lower bounds") {
  DiagonalContinuousSystem sys;
  sys.a = {Complex{-1.0, 0.0}};
  sys.b = {Complex{1.0, 0.0}};
  sys.c = {Complex{1.0, 0.0}};

  const TightnessResult ta = tightness_constructions(sys, 0.1, 0.0);
  CHECK(ta.lower_bound_a == doctest::Approx(0.1));
  CHECK(ta.measured_a >= ta.lower_bound_a - 1e-9);
  CHECK(ta.measured_a == doctest::Approx(1.0 / 9.0).epsilon(1e-6));  // 0.1/0.9 at s = 0

  const TightnessResult tb = tightness_constructions(sys, 0.0, 0.1);
  CHECK(tb.lower_bound_b == doctest::Approx(0.1));
  CHECK(tb.measured_b == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(tightness_constructions(sys, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(tightness_constructions(sys, 0.0, 2.0), std::invalid_argument);

  SeededRng rng(62);
  for (int rep = 0; rep < 10; ++rep) {
    SeededRng trial = rng.split(rep);
    const DiagonalContinuousSystem rnd = random_stable_system(trial, 8);
    double min_re = 1e300, min_bc = 1e300;
    for (std::size_t j = 0; j < 8; ++j) {
      min_re = std::min(min_re, std::abs(rnd.a[j].real()));
      min_bc = std::min(min_bc, std::abs(rnd.b[j] * rnd.c[j]));
    }
    const TightnessResult t = tightness_constructions(rnd, 0.4 * min_re, 0.9 * min_bc);
    CHECK(t.measured_a >= t.lower_bound_a * (1.0 - 1e-9) - 1e-6);
    CHECK(t.measured_b >= t.lower_bound_b * (1.0 - 1e-9) - 1e-6);
    // the reports sandwich the measurement between tight_lower and bound
    REQUIRE(t.report_a.tight_lower.has_value());
    CHECK(*t.report_a.tight_lower <= t.report_a.measured * (1.0 + 1e-9) + 1e-6);
    CHECK(t.report_a.bound_holds());
    REQUIRE(t.report_b.tight_lower.has_value());
    CHECK(*t.report_b.tight_lower <= t.report_b.measured * (1.0 + 1e-9) + 1e-6);
    CHECK(t.report_b.bound_holds());
  }
}

TEST_CASE("markov perturbation bound fixtures") {
  const ComplexVector h{Complex{1.0, 0.0}};
  const auto [m0, b0] = verify_markov_perturbation(h, h);
  CHECK(m0 == 0.0);
  CHECK(b0 == 0.0);

  const ComplexVector ht{Complex{1.0 + 1e-3, 0.0}};
  const auto [m1, b1] = verify_markov_perturbation(h, ht);
  CHECK(b1 == doctest::Approx(1e-3));
  CHECK(m1 == doctest::Approx(1e-3).epsilon(1e-9));  // |z^{-1}| = 1 on the circle
  CHECK(m1 <= b1 * (1.0 + 1e-12));

  SeededRng rng(63);
  for (int rep = 0; rep < 20; ++rep) {
    ComplexVector a(64), b(64);
    for (std::size_t j = 0; j < 64; ++j) {
      a[j] = rng.next_complex_gaussian();
      b[j] = a[j] + 0.1 * rng.next_complex_gaussian();
    }
    const auto [measured, bound] = verify_markov_perturbation(a, b);
    CHECK(measured <= bound);
  }
}
