#include "blwave/dimension.hpp"

#include <algorithm>

namespace blwave {

namespace {

// The band profile must be a single constant (possibly 0) across the whole
// representative band, otherwise the j-sum near 0 has no finite step form.
Rational band_constant(const StepProfile& band, const Interval& span) {
  if (band.empty()) return Rational(0);
  const auto& ps = band.pieces();
  if (ps.size() == 1 && ps[0].span == span) return ps[0].value;
  throw std::domain_error(
      "dimension sum has no finite step representation: dyadic band profile "
      "is not constant");
}

DimensionProfile finalize(StepProfile p) {
  DimensionProfile d;
  Rational covered(0);
  for (const auto& piece : p.pieces()) {
    d.attained.insert(piece.value);
    covered += piece.span.length().coeff;
  }
  if (covered < 2) d.attained.insert(Rational(0));
  d.max_value = d.attained.empty() ? Rational(0) : *d.attained.rbegin();
  d.integer_valued = std::all_of(d.attained.begin(), d.attained.end(),
                                 [](const Rational& v) { return rat_is_integer(v); });
  RationalPi pi_{Rational(1)};
  d.is_mra = p.equals_const_on(Rational(1), Interval{-pi_, pi_});
  d.profile = std::move(p);
  return d;
}

}  // namespace

RationalPi DyadicLadder::p(int l) const {
  return SnGeometry::make(n).a.scaled_pow2(l);
}

RationalPi DyadicLadder::q(int l) const {
  return SnGeometry::make(n).e.scaled_pow2(l - 1);
}

DimensionProfile dimension_function(const FrequencyWavelet& w) {
  IntervalSet supp = w.mag2.support();
  if (supp.empty()) throw std::domain_error("dimension sum of the zero profile");
  DyadicBands bands = dyadic_lattice_sum(w.mag2);  // throws when touching 0
  RationalPi alpha = bands.alpha;
  Rational c_pos = band_constant(bands.pos, {alpha, alpha.scaled_pow2(1)});
  Rational c_neg = band_constant(bands.neg, {-alpha.scaled_pow2(1), -alpha});

  RationalPi pi_{Rational(1)};
  RationalPi big = supp.sup_abs();
  RationalPi cap = std::min(alpha, pi_);
  std::vector<StepPiece> tail;
  if (c_neg != 0) tail.push_back({{-cap, RationalPi{Rational(0)}}, c_neg});
  if (c_pos != 0) tail.push_back({{RationalPi{Rational(0)}, cap}, c_pos});
  StepProfile total = StepProfile::from_pieces(std::move(tail));

  IntervalSet period = IntervalSet::single({-pi_, pi_});
  if (cap < pi_) {
    // Direct j-sum on [-pi, -cap) u [cap, pi); 2^j |x| <= sup|supp| bounds j.
    IntervalSet outer = period.difference(IntervalSet::single({-cap, cap}));
    int j_hi = floor_log2(big.coeff / cap.coeff);
    for (int j = 1; j <= j_hi; ++j)
      total = total.add(w.mag2.pullback_dilate(j).restrict_to(outer));
  }
  // k != 0 terms: |x + 2k pi| >= (2|k|-1) pi on the period, and a j >= 1 term
  // needs 2 (2|k|-1) <= sup|supp| / pi.
  for (long k = 1; Rational(2 * (2 * k - 1)) <= big.coeff; ++k) {
    int j_hi = floor_log2(big.coeff / (2 * k - 1));
    for (int j = 1; j <= j_hi; ++j) {
      for (long sk : {k, -k}) {
        StepProfile term = w.mag2.pullback_dilate(j)
                               .pullback_translate(RationalPi{Rational(2 * sk)})
                               .restrict_to(period);
        total = total.add(term);
      }
    }
  }
  return finalize(std::move(total));
}

DimensionProfile closed_form_dn(int n) {
  if (n < 3) throw std::invalid_argument("closed_form_dn requires n >= 3");
  SnGeometry g = SnGeometry::make(n);
  RationalPi pi_{Rational(1)};
  std::vector<StepPiece> half;
  half.push_back({{RationalPi{Rational(0)}, g.a.scaled_pow2(2 - n)},
                  Rational(n - 1)});
  for (int r = 2; r <= n - 1; ++r)
    half.push_back({{g.a.scaled_pow2(1 - r), g.a.scaled_pow2(2 - r)},
                    Rational(r - 1)});
  half.push_back({{g.e, pi_}, Rational(1)});
  std::vector<StepPiece> pieces = half;
  for (const auto& p : half)
    pieces.push_back({{-p.span.hi, -p.span.lo}, p.value});
  return finalize(StepProfile::from_pieces(std::move(pieces)));
}

StepProfile scaling_modulus_sq(const FrequencyWavelet& w) {
  IntervalSet supp = w.mag2.support();
  if (supp.empty()) return StepProfile();
  DyadicBands bands = dyadic_lattice_sum(w.mag2);
  RationalPi alpha = bands.alpha;
  Rational c_pos = band_constant(bands.pos, {alpha, alpha.scaled_pow2(1)});
  Rational c_neg = band_constant(bands.neg, {-alpha.scaled_pow2(1), -alpha});
  RationalPi big = supp.sup_abs();

  std::vector<StepPiece> tail;
  if (c_neg != 0) tail.push_back({{-alpha, RationalPi{Rational(0)}}, c_neg});
  if (c_pos != 0) tail.push_back({{RationalPi{Rational(0)}, alpha}, c_pos});
  StepProfile total = StepProfile::from_pieces(std::move(tail));

  RationalPi beyond{big.coeff + 1};
  IntervalSet outer = IntervalSet::from_pieces(
      {{-beyond, -alpha}, {alpha, beyond}});
  int j_hi = floor_log2(big.coeff / alpha.coeff);
  for (int j = 1; j <= j_hi; ++j)
    total = total.add(w.mag2.pullback_dilate(j).restrict_to(outer));
  return total;
}

MraVerdict mra_verdict(const FrequencyWavelet& w) {
  DimensionProfile d = dimension_function(w);
  MraVerdict v;
  v.is_mra = d.is_mra;
  if (v.is_mra) return v;
  RationalPi pi_{Rational(1)};
  std::vector<StepPiece> cells;
  RationalPi cursor = -pi_;
  for (const auto& p : d.profile.pieces()) {
    if (cursor < p.span.lo) cells.push_back({{cursor, p.span.lo}, Rational(0)});
    cells.push_back(p);
    cursor = p.span.hi;
  }
  if (cursor < pi_) cells.push_back({{cursor, pi_}, Rational(0)});
  for (const auto& c : cells)
    if (c.value == 0 && c.span.lo.coeff >= 0) {
      v.evidence = c;
      return v;
    }
  for (const auto& c : cells)
    if (c.value != 1) {
      v.evidence = c;
      return v;
    }
  return v;
}

}  // namespace blwave
