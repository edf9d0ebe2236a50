#include "blwave/time_domain.hpp"

#include <algorithm>
#include <cmath>

namespace blwave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct FlatPiece {
  double lo, hi;
  std::complex<double> coef;  // sqrt(mag2) * e^{i theta}
};

// Cells refined against both the magnitude and the phase breakpoints, so the
// integrand is a single complex constant per cell.
std::vector<FlatPiece> flatten(const FrequencyWavelet& w) {
  std::vector<RationalPi> cuts = w.mag2.breakpoints();
  for (const auto& b : w.phase.breakpoints()) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<FlatPiece> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    RationalPi mid{(cuts[i].coeff + cuts[i + 1].coeff) / 2};
    Rational q = w.mag2.value_at(mid);
    if (q == 0) continue;
    double amp = std::sqrt(rat_to_double(q));
    double angle = w.phase.value_at(mid).radians();
    out.push_back({rat_to_double(cuts[i].coeff) * M_PI,
                   rat_to_double(cuts[i + 1].coeff) * M_PI,
                   std::polar(amp, angle)});
  }
  return out;
}

// (1/2pi) integral over [lo, hi) of e^{i f xi} d xi, series-guarded near
// f (hi-lo) = 0 against cancellation.
std::complex<double> segment_integral(double lo, double hi, double f) {
  double h = (hi - lo) / 2, m = (hi + lo) / 2;
  double z = h * f;
  double sinc;  // sin(z)/z
  if (std::abs(f * (hi - lo)) < 1e-6) {
    double z2 = z * z;
    sinc = 1 - z2 / 6 + z2 * z2 / 120 - z2 * z2 * z2 / 5040;
  } else {
    sinc = std::sin(z) / z;
  }
  return std::polar(1.0, m * f) * (2 * h / kTwoPi * sinc);
}

}  // namespace

std::complex<double> time_value(const FrequencyWavelet& w, double x) {
  std::complex<double> sum = 0;
  for (const auto& p : flatten(w)) sum += p.coef * segment_integral(p.lo, p.hi, x);
  return sum;
}

bool hermitian_symmetric(const FrequencyWavelet& w) {
  if (!(w.mag2 == w.mag2.pullback_negate())) return false;
  // Phase odd mod 2*pi at the midpoint of every support cell.
  std::vector<RationalPi> cuts = w.mag2.breakpoints();
  for (const auto& b : w.phase.breakpoints()) {
    cuts.push_back(b);
    cuts.push_back(-b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    RationalPi mid{(cuts[i].coeff + cuts[i + 1].coeff) / 2};
    if (w.mag2.value_at(mid) == 0) continue;
    PhasePi total = w.phase.value_at(mid) + w.phase.value_at(-mid);
    if (!(total.turns == 0)) return false;
  }
  return true;
}

TimeSamples sample_time(const FrequencyWavelet& w, double x_min, double x_max,
                        int count) {
  if (count < 2) throw std::invalid_argument("sample_time: count must be >= 2");
  std::vector<FlatPiece> pieces = flatten(w);
  TimeSamples out;
  out.hermitian = hermitian_symmetric(w);
  out.xs.reserve(count);
  out.values.reserve(count);
  for (int i = 0; i < count; ++i) {
    double x = x_min + (x_max - x_min) * i / (count - 1);
    std::complex<double> sum = 0;
    for (const auto& p : pieces) sum += p.coef * segment_integral(p.lo, p.hi, x);
    out.xs.push_back(x);
    out.values.push_back(sum);
  }
  return out;
}

std::complex<double> gram_entry(const FrequencyWavelet& w, int j, long k,
                                int j2, long k2) {
  if (std::abs(j) > 30 || std::abs(j2) > 30)
    throw std::invalid_argument("gram_entry: scale out of range");
  std::vector<RationalPi> base = w.mag2.breakpoints();
  for (const auto& b : w.phase.breakpoints()) base.push_back(b);
  std::vector<RationalPi> cuts;
  for (const auto& b : base) {
    cuts.push_back(b.scaled_pow2(j));
    cuts.push_back(b.scaled_pow2(j2));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double freq = double(k2) * std::exp2(-j2) - double(k) * std::exp2(-j);
  std::complex<double> sum = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    RationalPi mid{(cuts[i].coeff + cuts[i + 1].coeff) / 2};
    Rational q1 = w.mag2.value_at(mid.scaled_pow2(-j));
    if (q1 == 0) continue;
    Rational q2 = w.mag2.value_at(mid.scaled_pow2(-j2));
    if (q2 == 0) continue;
    double amp = std::sqrt(rat_to_double(q1 * q2));
    double angle = w.phase.value_at(mid.scaled_pow2(-j)).radians() -
                   w.phase.value_at(mid.scaled_pow2(-j2)).radians();
    double lo = rat_to_double(cuts[i].coeff) * M_PI;
    double hi = rat_to_double(cuts[i + 1].coeff) * M_PI;
    sum += std::polar(amp, angle) * segment_integral(lo, hi, freq);
  }
  return std::exp2(-(j + j2) / 2.0) * sum;
}

}  // namespace blwave
