#include "blwave/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace blwave {

namespace {

RationalPi midpoint(const Interval& iv) {
  return RationalPi((iv.lo.coeff + iv.hi.coeff) / 2);
}

mpz_class floor_q(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

mpz_class ceil_q(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::vector<RationalPi> all_breakpoints(const FrequencyWavelet& w) {
  std::vector<RationalPi> bps = w.mag2.breakpoints();
  for (const auto& b : w.phase.breakpoints()) bps.push_back(b);
  return bps;
}

// Splits each piece of `domain` at the interior cuts.
std::vector<Interval> make_cells(const IntervalSet& domain,
                                 std::vector<RationalPi> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> cells;
  for (const auto& p : domain.pieces()) {
    RationalPi prev = p.lo;
    for (const auto& c : cuts) {
      if (c <= prev) continue;
      if (c >= p.hi) break;
      cells.push_back({prev, c});
      prev = c;
    }
    cells.push_back({prev, p.hi});
  }
  return cells;
}

}  // namespace

std::vector<TmCellTerms> tm_cell_data(const FrequencyWavelet& w, long m) {
  if (m == 0) throw std::invalid_argument("tm_cell_data: m must be nonzero");
  std::vector<TmCellTerms> out;
  IntervalSet supp = w.support();
  if (supp.empty()) return out;
  RationalPi big = supp.sup_abs();
  Rational m_abs(std::labs(m));
  RationalPi step{Rational(mpz_class(m) * 2)};  // 2m*pi

  // A level-j term needs supp and supp - 2^{j+1} m pi to meet, which forces
  // 2^j |m| <= sup|supp| / pi.
  std::vector<int> levels;
  IntervalSet domain;
  for (int j = 0; rat_pow2(m_abs, j) <= big.coeff; ++j) {
    RationalPi shift{rat_pow2(Rational(mpz_class(m) * -2), j)};
    IntervalSet dj = supp.intersect(supp.translate(shift)).dilate_pow2(-j);
    if (dj.empty()) continue;
    levels.push_back(j);
    domain = domain.unite(dj);
  }
  if (domain.empty()) return out;

  std::vector<RationalPi> cuts;
  for (const auto& b : all_breakpoints(w)) {
    for (int j : levels) {
      cuts.push_back(b.scaled_pow2(-j));
      cuts.push_back(b.scaled_pow2(-j) - step);
    }
  }
  for (const auto& cell : make_cells(domain, std::move(cuts))) {
    RationalPi mid = midpoint(cell);
    std::vector<PhasedRadical> terms;
    for (int j : levels) {
      RationalPi a1 = mid.scaled_pow2(j);
      Rational q1 = w.mag2.value_at(a1);
      if (q1 == 0) continue;
      RationalPi a2 = (mid + step).scaled_pow2(j);
      Rational q2 = w.mag2.value_at(a2);
      if (q2 == 0) continue;
      terms.push_back({q1 * q2, w.phase.value_at(a1) - w.phase.value_at(a2)});
    }
    if (!terms.empty()) out.push_back({cell, std::move(terms)});
  }
  return out;
}

Rational check_norm(const FrequencyWavelet& w) {
  return w.mag2.integral().coeff / 2;
}

std::pair<bool, DyadicBands> check_eq1(const FrequencyWavelet& w) {
  if (w.mag2.empty()) return {false, DyadicBands{}};
  DyadicBands bands = dyadic_lattice_sum(w.mag2);
  Interval pos{bands.alpha, bands.alpha.scaled_pow2(1)};
  Interval neg{-bands.alpha.scaled_pow2(1), -bands.alpha};
  bool ok = bands.pos.equals_const_on(Rational(1), pos) &&
            bands.neg.equals_const_on(Rational(1), neg);
  return {ok, bands};
}

std::pair<bool, std::vector<Eq2Witness>> check_eq2(const FrequencyWavelet& w,
                                                   bool& numeric_assisted) {
  std::vector<Eq2Witness> witnesses;
  IntervalSet supp = w.support();
  if (supp.empty()) return {true, witnesses};

  // Candidate odd shifts: 2^{j+1} m pi must move one support piece onto
  // another, so for each ordered piece pair (2^{j+1} m) pi lies strictly
  // between the gap and the span of the pair. Positive m are covered by
  // t_m(x) = conj(t_{-m}(x + 2m pi)).
  std::set<mpz_class> candidates;
  const auto& pieces = supp.pieces();
  for (const auto& p1 : pieces) {
    for (const auto& p2 : pieces) {
      for (int j = 0;; ++j) {
        Rational lo = rat_pow2((p2.lo - p1.hi).coeff, -(j + 1));
        Rational hi = rat_pow2((p2.hi - p1.lo).coeff, -(j + 1));
        if (lo >= -1 && hi <= 1) break;  // no |m| >= 1 here or deeper
        for (mpz_class mz = floor_q(lo) + 1; mz < 0 && mz <= ceil_q(hi) - 1;
             ++mz) {
          if (mpz_odd_p(mz.get_mpz_t())) candidates.insert(mz);
        }
      }
    }
  }
  for (const auto& mz : candidates) {
    if (!mz.fits_slong_p())
      throw std::domain_error("check_eq2: translation index overflow");
    long m = mz.get_si();
    for (const auto& cell : tm_cell_data(w, m)) {
      ZeroSumDecision d = decide_zero_sum(cell.terms);
      if (!d.exact) numeric_assisted = true;
      if (!d.is_zero) witnesses.push_back({m, cell.cell, d.magnitude, d.exact});
    }
  }
  return {witnesses.empty(), witnesses};
}

std::pair<bool, StepProfile> check_eq3(const FrequencyWavelet& w) {
  StepProfile lattice = translation_lattice_sum(w.mag2);
  RationalPi zero{Rational(0)}, two_pi{Rational(2)};
  bool ok = lattice.equals_const_on(Rational(1), Interval{zero, two_pi});
  return {ok, lattice};
}

std::pair<bool, std::vector<Eq4Witness>> check_eq4(const FrequencyWavelet& w,
                                                   bool& numeric_assisted) {
  std::vector<Eq4Witness> witnesses;
  IntervalSet supp = w.support();
  if (supp.empty()) return {true, witnesses};
  auto gap = supp.min_abs_gap();
  if (!gap) throw std::domain_error("check_eq4: support touches 0");
  RationalPi big = supp.sup_abs();
  RationalPi zero{Rational(0)}, two_pi{Rational(2)};
  IntervalSet period = IntervalSet::single({zero, two_pi});
  std::vector<RationalPi> bps = all_breakpoints(w);

  // A level-j term needs y and 2^j y both in the support.
  for (int j = 1; rat_pow2(gap->coeff, j) <= big.coeff; ++j) {
    IntervalSet meet = supp.intersect(supp.dilate_pow2(-j));
    if (meet.empty()) continue;
    std::set<mpz_class> ks;
    for (const auto& p : meet.pieces()) {
      // x = y - 2k*pi lands in [0, 2*pi) iff p.lo/2pi - 1 < k < p.hi/2pi.
      for (mpz_class kz = floor_q(p.lo.coeff / 2 - 1) + 1;
           kz <= ceil_q(p.hi.coeff / 2) - 1; ++kz) {
        ks.insert(kz);
      }
    }
    if (ks.empty()) continue;
    IntervalSet domain;
    std::vector<RationalPi> cuts;
    for (const auto& kz : ks) {
      RationalPi shift{Rational(kz) * -2};
      domain = domain.unite(meet.translate(shift).intersect(period));
      for (const auto& b : bps) {
        cuts.push_back(b + shift);
        cuts.push_back(b.scaled_pow2(-j) + shift);
      }
    }
    for (const auto& cell : make_cells(domain, std::move(cuts))) {
      RationalPi mid = midpoint(cell);
      std::vector<PhasedRadical> terms;
      for (const auto& kz : ks) {
        RationalPi y = mid + RationalPi{Rational(kz) * 2};
        Rational q1 = w.mag2.value_at(y);
        if (q1 == 0) continue;
        RationalPi y2 = y.scaled_pow2(j);
        Rational q2 = w.mag2.value_at(y2);
        if (q2 == 0) continue;
        terms.push_back({q1 * q2, w.phase.value_at(y) - w.phase.value_at(y2)});
      }
      if (terms.empty()) continue;
      ZeroSumDecision d = decide_zero_sum(terms);
      if (!d.exact) numeric_assisted = true;
      if (!d.is_zero) witnesses.push_back({j, cell, d.magnitude, d.exact});
    }
  }
  return {witnesses.empty(), witnesses};
}

Thm32Report check_thm32(const FrequencyWavelet& w) {
  if (!w.n)
    throw std::invalid_argument("check_thm32: wavelet has no skeleton index");
  SnGeometry g = SnGeometry::make(*w.n);
  IntervalSet escaped = w.support().difference(g.sn());
  if (!escaped.empty()) {
    std::string msg = "check_thm32: support escapes the skeleton on";
    for (const auto& p : escaped.pieces())
      msg += " [" + p.lo.str() + ", " + p.hi.str() + ")";
    throw std::domain_error(msg);
  }
  Thm32Report r;
  int s = *w.n - 1;
  RationalPi minus_two_pi{Rational(-2)};
  r.i = w.mag2.equals_const_on(Rational(1), Interval{g.a, g.e}) &&
        w.mag2.equals_const_on(Rational(1), Interval{-g.e, -g.a});
  Interval win = g.bell_window();
  r.ii = w.mag2.add(w.mag2.pullback_dilate(s))
             .equals_const_on(Rational(1), win);
  r.iii = w.mag2.add(w.mag2.pullback_translate(minus_two_pi))
              .equals_const_on(Rational(1), win);
  StepProfile lhs = w.mag2.restrict_to(win);
  StepProfile rhs = w.mag2.pullback_dilate(s)
                        .pullback_translate(minus_two_pi)
                        .restrict_to(win);
  r.iv = (lhs == rhs);
  r.theta = validate_theta(g, w.mag2, w.phase);
  r.v = r.theta.valid;
  return r;
}

EvenBellReport check_even_bell(const FrequencyWavelet& w) {
  if (!w.n)
    throw std::invalid_argument(
        "check_even_bell: wavelet has no skeleton index");
  SnGeometry g = SnGeometry::make(*w.n);
  EvenBellReport r;
  r.is_even = (w.mag2 == w.mag2.pullback_negate());
  StepProfile reflected = w.mag2.pullback_negate().pullback_translate(
      RationalPi{Rational(-2)});  // x -> mag2(2pi - x)
  r.e5_holds = w.mag2.add(reflected)
                   .equals_const_on(Rational(1), g.bell_window());
  return r;
}

VerificationReport verify(const FrequencyWavelet& w) {
  VerificationReport r;
  r.norm_sq = check_norm(w);
  r.norm_ok = (r.norm_sq == 1);
  std::tie(r.eq1_ok, r.rho) = check_eq1(w);
  std::tie(r.eq2_ok, r.eq2_witnesses) = check_eq2(w, r.numeric_assisted);
  std::tie(r.eq3_ok, r.eq3_profile) = check_eq3(w);
  std::tie(r.eq4_ok, r.eq4_witnesses) = check_eq4(w, r.numeric_assisted);
  if (w.n && w.support().subset_of(SnGeometry::make(*w.n).sn()))
    r.thm32 = check_thm32(w);
  return r;
}

}  // namespace blwave
