#include "hankel_lti/hinf.hpp"

#include <cmath>
#include <vector>

namespace hlti {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInvPhi = 0.6180339887498948482045868343656;  // 1/golden ratio

double abs_diff(const TransferFn& f, const TransferFn& g, Complex point) {
  return std::abs(f(point) - g(point));
}

struct Refined {
  double value;
  double param;
  double width;
};

// golden-section maximization of t -> |f-g|(map(t)) on [lo, hi]
template <typename MapFn>
Refined golden_refine(const TransferFn& f, const TransferFn& g, const MapFn& map, double lo,
                      double hi, std::size_t iterations) {
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = abs_diff(f, g, map(x1));
  double f2 = abs_diff(f, g, map(x2));
  for (std::size_t it = 0; it < iterations && b - a > 1e-300; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = abs_diff(f, g, map(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = abs_diff(f, g, map(x1));
    }
  }
  if (f1 >= f2) return {f1, x1, b - a};
  return {f2, x2, b - a};
}

template <typename MapFn>
HinfEstimate estimate_on_params(const TransferFn& f, const TransferFn& g,
                                const std::vector<double>& params, const MapFn& map,
                                std::size_t refine_iterations) {
  HinfEstimate est;
  std::size_t best = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double v = abs_diff(f, g, map(params[i]));
    if (v > est.grid_value) {
      est.grid_value = v;
      best = i;
    }
  }
  est.value = est.grid_value;
  est.maximizer = map(params[best]);
  const double lo = params[best == 0 ? 0 : best - 1];
  const double hi = params[best + 1 < params.size() ? best + 1 : best];
  if (hi > lo && refine_iterations > 0) {
    const Refined r = golden_refine(f, g, map, lo, hi, refine_iterations);
    if (r.value > est.value) {
      est.value = r.value;
      est.maximizer = map(r.param);
    }
    est.bracket_width = r.width;
  }
  est.refined_gain = est.value - est.grid_value;
  return est;
}

}  // namespace

std::size_t GridSpec::total_points() const {
  const double decades = std::log10(f_max / f_min);
  return static_cast<std::size_t>(std::ceil(decades * static_cast<double>(points_per_decade))) + 1;
}

HinfEstimate hinf_distance_axis(const TransferFn& f, const TransferFn& g, const GridSpec& grid) {
  grid.validate();
  const std::size_t pts = grid.total_points();
  std::vector<double> ts;
  ts.reserve(2 * pts + 1);
  const double l0 = std::log10(grid.f_min), l1 = std::log10(grid.f_max);
  for (std::size_t i = 0; i < pts; ++i) {
    const double t =
        std::pow(10.0, l1 - (l1 - l0) * static_cast<double>(i) / static_cast<double>(pts - 1));
    ts.push_back(-t);
  }
  ts.push_back(0.0);
  for (std::size_t i = 0; i < pts; ++i) {
    const double t =
        std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(pts - 1));
    ts.push_back(t);
  }
  const auto map = [](double t) { return Complex{0.0, t}; };
  return estimate_on_params(f, g, ts, map, grid.refine_iterations);
}

HinfEstimate hinf_distance_circle(const TransferFn& f, const TransferFn& g, const GridSpec& grid) {
  grid.validate();
  const std::size_t pts = std::max<std::size_t>(grid.total_points(), 16);
  std::vector<double> thetas(pts + 1);
  for (std::size_t i = 0; i <= pts; ++i)
    thetas[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(pts);
  const auto map = [](double th) { return std::polar(1.0, th); };
  return estimate_on_params(f, g, thetas, map, grid.refine_iterations);
}

}  // namespace hlti
