#pragma once

#include <cstddef>
#include <functional>

#include "hankel_lti/types.hpp"

namespace hlti {

/// Frequency grid for H-infinity estimation: log-spaced magnitudes in
/// [f_min, f_max], mirrored across zero, plus the origin itself.
struct GridSpec {
  double f_min = 1e-4;
  double f_max = 1e4;
  std::size_t points_per_decade = 512;
  std::size_t refine_iterations = 64;

  void validate() const {
    require(f_min > 0.0 && f_max > f_min, "GridSpec requires 0 < f_min < f_max");
    require(points_per_decade >= 2, "GridSpec requires at least 2 points per decade");
  }
  std::size_t total_points() const;
};

using TransferFn = std::function<Complex(Complex)>;

/// Grid + golden-section estimate of sup |f - g|. The value is a lower bound
/// on the true sup; refined_gain records how much refinement added beyond the
/// raw grid and bracket_width the final search interval.
struct HinfEstimate {
  double value = 0.0;
  Complex maximizer{0.0, 0.0};
  double grid_value = 0.0;
  double refined_gain = 0.0;
  double bracket_width = 0.0;
};

/// sup over the imaginary axis s = i t.
HinfEstimate hinf_distance_axis(const TransferFn& f, const TransferFn& g, const GridSpec& grid);

/// sup over the unit circle z = e^{i theta}; total_points() uniform angles.
HinfEstimate hinf_distance_circle(const TransferFn& f, const TransferFn& g, const GridSpec& grid);

}  // namespace hlti
