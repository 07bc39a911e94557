#include "hankel_lti/perturbation.hpp"

#include <cmath>
#include <sstream>

#include "hankel_lti/hope.hpp"

namespace hlti {

double perturbation_bound(const DiagonalContinuousSystem& sys, double delta_a, double delta_b) {
  const double n = static_cast<double>(sys.order());
  double max_bc = 0.0, max_inv = 0.0;
  for (std::size_t j = 0; j < sys.order(); ++j) {
    const double re = std::abs(sys.a[j].real());
    max_bc = std::max(max_bc, std::abs(sys.b[j] * sys.c[j]) / (re * re));
    max_inv = std::max(max_inv, 1.0 / re);
  }
  return 4.0 * n * delta_a * max_bc + n * delta_b * max_inv;
}

PerturbationReport verify_theorem2(const DiagonalContinuousSystem& sys,
                                   const DiagonalContinuousSystem& perturbed, double delta_a,
                                   double delta_b, const GridSpec& grid) {
  sys.validate();
  perturbed.validate();
  require(sys.order() == perturbed.order(), "perturbed system must have the same order");
  require(delta_a >= 0.0 && delta_b >= 0.0, "perturbation radii must be nonnegative");

  double min_re = 1e300;
  for (const auto& aj : sys.a) min_re = std::min(min_re, std::abs(aj.real()));
  if (delta_a > 0.5 * min_re) {
    std::ostringstream os;
    os << "Delta_A = " << delta_a << " exceeds min |Re a_j| / 2 = " << 0.5 * min_re;
    throw std::invalid_argument(os.str());
  }
  for (std::size_t j = 0; j < sys.order(); ++j) {
    if (std::abs(sys.a[j] - perturbed.a[j]) > delta_a * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "pole " << j << " moved by " << std::abs(sys.a[j] - perturbed.a[j])
         << ", beyond Delta_A = " << delta_a;
      throw std::invalid_argument(os.str());
    }
    const Complex bc = sys.b[j] * sys.c[j];
    const Complex bct = perturbed.b[j] * perturbed.c[j];
    const double shift = std::abs(bc - bct);
    const double allowed = std::min(std::abs(bc), delta_b);
    if (shift > allowed * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "product b_j c_j at index " << j << " moved by " << shift
         << ", beyond min(|b_j c_j|, Delta_B) = " << allowed;
      throw std::invalid_argument(os.str());
    }
  }

  PerturbationReport rep;
  rep.delta_a = delta_a;
  rep.delta_b = delta_b;
  rep.bound = perturbation_bound(sys, delta_a, delta_b);
  const TransferFn f = [&](Complex s) { return transfer_continuous_at(sys, s); };
  const TransferFn g = [&](Complex s) { return transfer_continuous_at(perturbed, s); };
  rep.measured = hinf_distance_axis(f, g, grid).value;
  return rep;
}

TightnessResult tightness_constructions(const DiagonalContinuousSystem& sys, double delta_a,
                                        double delta_b, const GridSpec& grid) {
  sys.validate();
  const std::size_t n = sys.order();
  double min_re = 1e300, min_bc = 1e300;
  std::size_t j1 = 0, j2 = 0;
  double best_inv = -1.0, best_bc = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double re = std::abs(sys.a[j].real());
    const double bc = std::abs(sys.b[j] * sys.c[j]);
    min_re = std::min(min_re, re);
    min_bc = std::min(min_bc, bc);
    if (1.0 / re > best_inv) {
      best_inv = 1.0 / re;
      j1 = j;
    }
    const double sens = bc / (re * re);
    if (sens > best_bc) {
      best_bc = sens;
      j2 = j;
    }
  }
  require(delta_a <= 0.5 * min_re, "tightness requires Delta_A <= min |Re a_j| / 2");
  require(delta_b <= min_bc, "tightness requires Delta_B <= min |b_j c_j|");

  TightnessResult out;
  out.perturbed_b = sys;
  // c_{j1} shifted so that the product b c moves by exactly Delta_B
  require(std::abs(sys.b[j1]) > 0.0, "tightness construction needs b_{j1} != 0");
  out.perturbed_b.c[j1] += delta_b / sys.b[j1];
  out.perturbed_a = sys;
  out.perturbed_a.a[j2] += delta_a;  // toward the axis, still stable

  out.lower_bound_b = delta_b * best_inv;
  out.lower_bound_a = delta_a * best_bc;

  const TransferFn f = [&](Complex s) { return transfer_continuous_at(sys, s); };
  const TransferFn ga = [&](Complex s) { return transfer_continuous_at(out.perturbed_a, s); };
  const TransferFn gb = [&](Complex s) { return transfer_continuous_at(out.perturbed_b, s); };
  out.measured_a = hinf_distance_axis(f, ga, grid).value;
  out.measured_b = hinf_distance_axis(f, gb, grid).value;

  out.report_a = PerturbationReport{delta_a, 0.0, perturbation_bound(sys, delta_a, 0.0),
                                    out.measured_a, out.lower_bound_a};
  out.report_b = PerturbationReport{0.0, delta_b, perturbation_bound(sys, 0.0, delta_b),
                                    out.measured_b, out.lower_bound_b};
  return out;
}

std::pair<double, double> verify_markov_perturbation(const ComplexVector& h,
                                                     const ComplexVector& h_tilde,
                                                     const GridSpec& grid) {
  require(h.size() == h_tilde.size() && !h.empty(), "Markov vectors must have equal length");
  ComplexVector diff(h.size());
  double norm2 = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    diff[j] = h[j] - h_tilde[j];
    norm2 += std::norm(diff[j]);
  }
  const double bound = std::sqrt(static_cast<double>(h.size())) * std::sqrt(norm2);
  const MarkovParams mp{h, Complex{0.0, 0.0}};
  const MarkovParams mpt{h_tilde, Complex{0.0, 0.0}};
  const TransferFn f = [&](Complex z) { return transfer_markov_at(mp, z); };
  const TransferFn g = [&](Complex z) { return transfer_markov_at(mpt, z); };
  const double measured = hinf_distance_circle(f, g, grid).value;
  return {measured, bound};
}

}  // namespace hlti
