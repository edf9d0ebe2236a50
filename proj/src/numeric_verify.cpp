#include "blwave/numeric_verify.hpp"

#include <cmath>

namespace blwave {

namespace {

struct FlatPiece {
  double lo, hi;
  std::complex<double> coef;
};

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
    out.push_back({rat_to_double(cuts[i].coeff) * M_PI,
                   rat_to_double(cuts[i + 1].coeff) * M_PI,
                   std::polar(std::sqrt(rat_to_double(q)),
                              w.phase.value_at(mid).radians())});
  }
  return out;
}

}  // namespace

NumericWavelet to_numeric(const FrequencyWavelet& w) {
  NumericWavelet nw;
  nw.support = w.mag2.support();
  std::vector<FlatPiece> pieces = flatten(w);
  for (const auto& p : pieces) nw.smooth_pieces.push_back({p.lo, p.hi});
  nw.hat = [pieces](double xi) -> std::complex<double> {
    size_t lo = 0, hi = pieces.size();
    while (lo < hi) {  // first piece with piece.lo > xi
      size_t m = (lo + hi) / 2;
      if (pieces[m].lo <= xi)
        lo = m + 1;
      else
        hi = m;
    }
    if (lo == 0) return 0;
    const FlatPiece& p = pieces[lo - 1];
    return xi < p.hi ? p.coef : std::complex<double>(0);
  };
  return nw;
}

NumericWavelet smooth_ramp_wavelet() {
  NumericWavelet nw;
  RationalPi a{Rational(2, 3)}, b{Rational(4, 3)}, d{Rational(8, 3)};
  nw.support = IntervalSet::from_pieces({{-d, -a}, {a, d}});
  double ad = rat_to_double(a.coeff) * M_PI;
  double bd = rat_to_double(b.coeff) * M_PI;
  double dd = rat_to_double(d.coeff) * M_PI;
  nw.smooth_pieces = {{-dd, -bd}, {-bd, -ad}, {ad, bd}, {bd, dd}};
  nw.hat = [=](double xi) -> std::complex<double> {
    auto ramp = [](double t) {
      if (t <= 0) return 0.0;
      if (t >= 1) return 1.0;
      return t * t * t * t * (35 - 84 * t + 70 * t * t - 20 * t * t * t);
    };
    double s = std::abs(xi);
    double mag;
    if (s >= ad && s < bd)
      mag = std::sin(M_PI / 2 * ramp(3 * s / (2 * M_PI) - 1));
    else if (s >= bd && s < dd)
      mag = std::cos(M_PI / 2 * ramp(3 * s / (4 * M_PI) - 1));
    else
      return 0;
    return std::polar(mag, xi / 2);
  };
  return nw;
}

NumericReport numeric_verify(const NumericWavelet& w, double grid_step,
                             double tolerance) {
  if (grid_step <= 0 || tolerance <= 0)
    throw std::invalid_argument("numeric_verify: step and tolerance must be positive");
  if (w.support.empty())
    throw std::domain_error("numeric_verify: empty support");
  auto gap = w.support.min_abs_gap();
  if (!gap) throw std::domain_error("numeric_verify: support touches 0");
  double alpha = rat_to_double(gap->coeff) * M_PI;
  double big = rat_to_double(w.support.sup_abs().coeff) * M_PI;
  for (const auto& [lo, hi] : w.smooth_pieces)
    if (grid_step > hi - lo)
      throw std::invalid_argument(
          "numeric_verify: grid too coarse for the smallest profile piece");

  NumericReport rep;
  rep.grid_step = grid_step;
  rep.tolerance = tolerance;

  // Norm: composite Simpson per smooth piece; the right endpoint is nudged
  // inward so half-open step pieces read their own value.
  double norm = 0;
  for (const auto& [lo, hi] : w.smooth_pieces) {
    long n = std::lround(std::ceil((hi - lo) / grid_step));
    if (n < 2) n = 2;
    if (n % 2) ++n;
    double h = (hi - lo) / n;
    double acc = std::norm(w.hat(lo)) + std::norm(w.hat(hi - 1e-6 * h));
    for (long i = 1; i < n; ++i)
      acc += (i % 2 ? 4 : 2) * std::norm(w.hat(lo + i * h));
    norm += acc * h / 3;
  }
  rep.norm_residual = std::abs(norm / (2 * M_PI) - 1);

  int j_cap = (int)std::ceil(std::log2(big / alpha)) + 1;

  // Dyadic sum == 1 on the two representative bands.
  for (double sign : {1.0, -1.0}) {
    long cnt = std::lround(std::ceil(alpha / grid_step));
    for (long i = 0; i < cnt; ++i) {
      double x = sign * (alpha + (i + 0.5) * alpha / cnt);
      double sum = 0;
      for (int j = -j_cap; j <= j_cap; ++j) sum += std::norm(w.hat(std::ldexp(x, j)));
      rep.eq1_residual = std::max(rep.eq1_residual, std::abs(sum - 1));
    }
  }

  // Odd-shift dyadic cancellation.
  long m_max = std::lround(std::ceil(big / M_PI)) + 1;
  long cnt2 = std::lround(std::ceil(2 * big / grid_step));
  for (long mm = 1; mm <= m_max; mm += 2) {
    for (long m : {mm, -mm}) {
      double shift = 2 * M_PI * m;
      for (long i = 0; i < cnt2; ++i) {
        double x = -big + (i + 0.5) * (2 * big) / cnt2;
        std::complex<double> sum = 0;
        for (int j = 0; j <= j_cap; ++j) {
          double s = std::ldexp(1.0, j);
          if (s * std::min(std::abs(x), std::abs(x + shift)) > big) break;
          sum += w.hat(s * x) * std::conj(w.hat(s * (x + shift)));
        }
        rep.eq2_residual = std::max(rep.eq2_residual, std::abs(sum));
      }
    }
  }

  // Translation lattice == 1 and cross-scale translation sums == 0 on one
  // period.
  long k_max = std::lround(std::ceil(big / (2 * M_PI))) + 1;
  long cnt3 = std::lround(std::ceil(2 * M_PI / grid_step));
  int j4_cap = (int)std::floor(std::log2(big / alpha));
  for (long i = 0; i < cnt3; ++i) {
    double x = (i + 0.5) * 2 * M_PI / cnt3;
    double sum3 = 0;
    for (long k = -k_max; k <= k_max; ++k)
      sum3 += std::norm(w.hat(x + 2 * M_PI * k));
    rep.eq3_residual = std::max(rep.eq3_residual, std::abs(sum3 - 1));
    for (int j = 1; j <= j4_cap; ++j) {
      std::complex<double> sum4 = 0;
      for (long k = -k_max; k <= k_max; ++k) {
        double y = x + 2 * M_PI * k;
        sum4 += w.hat(y) * std::conj(w.hat(std::ldexp(y, j)));
      }
      rep.eq4_residual = std::max(rep.eq4_residual, std::abs(sum4));
    }
  }
  return rep;
}

}  // namespace blwave
