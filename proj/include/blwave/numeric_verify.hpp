#pragma once

#include <algorithm>
#include <complex>
#include <functional>

#include "blwave/builder.hpp"

namespace blwave {

// Frequency-side function given by direct evaluation: the numeric image of a
// step wavelet, or a genuinely smooth profile. support carries the exact
// bounds used to truncate lattice sums; smooth_pieces lists intervals on
// which hat is smooth (quadrature runs per piece).
struct NumericWavelet {
  IntervalSet support;
  std::vector<std::pair<double, double>> smooth_pieces;
  std::function<std::complex<double>(double)> hat;
};

NumericWavelet to_numeric(const FrequencyWavelet& w);

// Smooth construction on the n = 2 skeleton, support +-[2pi/3, 8pi/3]:
// |hat|^2 climbs through a C^3 polynomial ramp across the window
// [2pi/3, 4pi/3), descends on [4pi/3, 8pi/3), is even in |xi|, with phase
// xi/2. Satisfies every identity the verifier checks, but is not a step
// profile, hence only numeric verification applies.
NumericWavelet smooth_ramp_wavelet();

struct NumericReport {
  double grid_step = 0;
  double tolerance = 0;
  double norm_residual = 0;
  double eq1_residual = 0;
  double eq2_residual = 0;
  double eq3_residual = 0;
  double eq4_residual = 0;
  double max_residual() const {
    return std::max({norm_residual, eq1_residual, eq2_residual, eq3_residual,
                     eq4_residual});
  }
  bool verdict() const { return max_residual() <= tolerance; }
};

// Grid evaluation of the norm and the four identities, truncated by the
// exact support bounds. Grids are midpoint grids of spacing grid_step.
// Throws std::invalid_argument when grid_step exceeds the smallest smooth
// piece (too coarse to resolve the profile), std::domain_error when the
// support touches 0.
NumericReport numeric_verify(const NumericWavelet& w, double grid_step,
                             double tolerance);

}  // namespace blwave
