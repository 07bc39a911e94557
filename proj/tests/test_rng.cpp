#include <doctest.h>

#include <cmath>

#include "hankel_lti/rng.hpp"

using namespace hlti;

TEST_CASE("identical seed and stream replay identical draws") {
  SeededRng a(123, 9), b(123, 9);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  SeededRng c(123, 10);
  bool any_diff = false;
  SeededRng a2(123, 9);
  for (int i = 0; i < 16; ++i) any_diff = any_diff || (a2.next_u64() != c.next_u64());
  CHECK(any_diff);
}

TEST_CASE("split streams are reproducible and distinct") {
  const SeededRng base(77);
  SeededRng s1 = base.split(1), s1b = base.split(1), s2 = base.split(2);
  bool differs = false;
  for (int i = 0; i < 16; ++i) {
    const std::uint64_t x = s1.next_u64();
    CHECK(x == s1b.next_u64());
    differs = differs || (x != s2.next_u64());
  }
  CHECK(differs);
}

TEST_CASE("uniform disk draws match the analytic mean radius") {
  SeededRng rng(2024);
  const int samples = 100000;
  double mean_abs = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Complex z = rng.next_uniform_disk();
    CHECK(std::abs(z) < 1.0);
    mean_abs += std::abs(z);
  }
  mean_abs /= samples;
  CHECK(std::abs(mean_abs - 2.0 / 3.0) < 0.01);
}

TEST_CASE("boundary-exponent radii have the exact tail law") {
  SeededRng rng(99);
  const int samples = 100000;
  int above = 0;
  for (int i = 0; i < samples; ++i) {
    const Complex z = rng.next_boundary_exponent(1.0);
    CHECK(std::abs(z) < 1.0);
    if (std::abs(z) > 0.99) ++above;
  }
  const double p = double(above) / samples;
  CHECK(std::abs(p - 0.01) < 0.003);
  CHECK_THROWS_AS(rng.next_boundary_exponent(0.0), std::invalid_argument);
}

TEST_CASE("gaussian moments are sane") {
  SeededRng rng(5);
  const int samples = 100000;
  double mean = 0.0, var = 0.0, cvar = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double g = rng.next_gaussian();
    mean += g;
    var += g * g;
    cvar += std::norm(rng.next_complex_gaussian());
  }
  mean /= samples;
  var /= samples;
  cvar /= samples;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
  CHECK(std::abs(cvar - 1.0) < 0.03);  // E|z|^2 = 1 with the 1/sqrt(2) split
}
