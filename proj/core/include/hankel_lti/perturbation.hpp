#pragma once

#include <optional>
#include <utility>

#include "hankel_lti/hinf.hpp"
#include "hankel_lti/state_space.hpp"

namespace hlti {

/// Outcome of one perturbation-bound check. `measured` is the grid-estimated
/// H-infinity distance, `bound` the theorem's right-hand side.
struct PerturbationReport {
  double delta_a = 0.0;
  double delta_b = 0.0;
  double bound = 0.0;
  double measured = 0.0;
  std::optional<double> tight_lower;  // present when a tightness construction produced it

  bool bound_holds() const { return measured <= bound; }
};

/// 4 n Delta_A max_j |b_j c_j| / |Re a_j|^2  +  n Delta_B max_j 1 / |Re a_j|.
double perturbation_bound(const DiagonalContinuousSystem& sys, double delta_a, double delta_b);

/// Validates the admissibility conditions |a_j - at_j| <= Delta_A <=
/// min |Re a_j|/2 and |b_j c_j - bt_j ct_j| <= min(|b_j c_j|, Delta_B),
/// then measures ||G - Gt||_inf against the bound.
PerturbationReport verify_theorem2(const DiagonalContinuousSystem& sys,
                                   const DiagonalContinuousSystem& perturbed, double delta_a,
                                   double delta_b, const GridSpec& grid = {});

/// Worst-case single-coefficient perturbations: c_{j1} += Delta_B with j1
/// maximizing 1/|Re a_j|, and a_{j2} += Delta_A with j2 maximizing
/// |b_j c_j| / |Re a_j|^2. Measured distances must reach the stated lower
/// bounds (up to grid slack).
struct TightnessResult {
  DiagonalContinuousSystem perturbed_a;
  DiagonalContinuousSystem perturbed_b;
  double lower_bound_a = 0.0;
  double lower_bound_b = 0.0;
  double measured_a = 0.0;
  double measured_b = 0.0;
  PerturbationReport report_a;  // tight_lower populated
  PerturbationReport report_b;
};

TightnessResult tightness_constructions(const DiagonalContinuousSystem& sys, double delta_a,
                                        double delta_b, const GridSpec& grid = {});

/// Markov-parameter perturbation: returns (measured, bound) with
/// bound = sqrt(n) ||h - ht||_2, measured over the unit circle.
std::pair<double, double> verify_markov_perturbation(const ComplexVector& h,
                                                     const ComplexVector& h_tilde,
                                                     const GridSpec& grid = {});

}  // namespace hlti
