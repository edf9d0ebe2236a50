#pragma once

#include <complex>
#include <vector>

#include "blwave/builder.hpp"

namespace blwave {

struct TimeSamples {
  std::vector<double> xs;
  std::vector<std::complex<double>> values;
  // mag2 even and phase odd mod 2*pi: psi-hat Hermitian, so psi is real.
  bool hermitian = false;
};

// psi(x) = (1/2pi) integral of sqrt(mag2) e^{i theta} e^{i x xi} d xi,
// integrated in closed form piece by piece.
std::complex<double> time_value(const FrequencyWavelet& w, double x);

// Uniform grid of count points on [x_min, x_max], endpoints included.
// Throws std::invalid_argument for count < 2.
TimeSamples sample_time(const FrequencyWavelet& w, double x_min, double x_max,
                        int count);

// <psi_{j,k}, psi_{j2,k2}> for psi_{j,k}(x) = 2^{j/2} psi(2^j x - k), via
// (1/2pi) integral of psi-hat_{j,k} conj(psi-hat_{j2,k2}) with
// psi-hat_{j,k}(xi) = 2^{-j/2} e^{-i k xi / 2^j} psi-hat(xi / 2^j).
// Throws std::invalid_argument when |j| or |j2| exceeds 30.
std::complex<double> gram_entry(const FrequencyWavelet& w, int j, long k,
                                int j2, long k2);

bool hermitian_symmetric(const FrequencyWavelet& w);

}  // namespace blwave
