#include "blwave/builder.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace blwave {

namespace {

RationalPi two_pi() { return RationalPi::of(2); }

// Phase that is pi on supp n pi_region and 0 on the rest of the support.
PhaseProfile canonical_phase(const IntervalSet& supp,
                             const IntervalSet& pi_region) {
  std::vector<PhasePiece> pieces;
  IntervalSet flipped = supp.intersect(pi_region);
  for (const auto& iv : flipped.pieces())
    pieces.push_back({iv, PhasePi::of(Rational(1))});
  IntervalSet flat = supp.difference(pi_region);
  for (const auto& iv : flat.pieces())
    pieces.push_back({iv, PhasePi()});
  return PhaseProfile::from_pieces(std::move(pieces));
}

PhaseProfile zero_phase(const IntervalSet& supp) {
  return canonical_phase(supp, IntervalSet());
}

// Cells of the bell window where 0 < bell2 < 1.
IntervalSet strict_cells(const StepProfile& bell2) {
  std::vector<Interval> out;
  for (const auto& p : bell2.pieces())
    if (p.value > 0 && p.value < 1) out.push_back(p.span);
  return IntervalSet::from_pieces(std::move(out));
}

}  // namespace

StepProfile extend_bell(const SnGeometry& g, const StepProfile& bell2) {
  Interval window = g.bell_window();
  if (!bell2.support().subset_of(IntervalSet::single(window)))
    throw std::invalid_argument("bell support escapes the window");
  if (!bell2.values_within(Rational(0), Rational(1)))
    throw std::invalid_argument("bell values outside [0,1]");

  std::vector<StepPiece> pieces;
  auto push_all = [&pieces](const StepProfile& p) {
    for (const auto& piece : p.pieces()) pieces.push_back(piece);
  };

  // (i): 1 on +/-[a, e).
  pieces.push_back({{g.a, g.e}, Rational(1)});
  pieces.push_back({{-g.e, -g.a}, Rational(1)});
  // The window itself.
  push_all(bell2);
  // (ii): 1 - bell2(x / 2^{n-1}) on [c, d).
  StepProfile on_cd = StepProfile::constant_on(
      IntervalSet::single({g.c, g.d}), Rational(1))
      .add(bell2.pullback_dilate(-(g.n - 1)).scale(Rational(-1)));
  push_all(on_cd);
  // (iii): 1 - bell2(x + 2pi) on [-b, -e).
  StepProfile on_nbe = StepProfile::constant_on(
      IntervalSet::single({-g.b, -g.e}), Rational(1))
      .add(bell2.pullback_translate(two_pi()).scale(Rational(-1)));
  push_all(on_nbe);
  // (iv): bell2(x / 2^{n-1} + 2pi) on [-d, -c).
  push_all(bell2.pullback_translate(two_pi()).pullback_dilate(-(g.n - 1)));

  return StepProfile::from_pieces(std::move(pieces));
}

ThetaWitness validate_theta(const SnGeometry& g, const StepProfile& mag2,
                            const PhaseProfile& phase) {
  IntervalSet supp = mag2.support();
  if (!phase.covers(supp))
    throw std::invalid_argument("phase undefined on part of the support");

  IntervalSet window = IntervalSet::single(g.bell_window());
  IntervalSet triple =
      window.intersect(supp).intersect(supp.dilate_pow2(-(g.n - 1)));

  ThetaWitness w;
  if (triple.empty()) {
    w.valid = true;  // any theta is admissible
    return w;
  }

  // Refine the triple intersection so that all four phase arguments are
  // constant on each cell: pull every breakpoint back through the four maps
  // x, 2^{n-1}(x - 2pi), x - 2pi, 2^{n-1} x.
  std::vector<RationalPi> cuts;
  auto add_preimages = [&](const RationalPi& beta) {
    cuts.push_back(beta);
    cuts.push_back(beta.scaled_pow2(-(g.n - 1)) + two_pi());
    cuts.push_back(beta + two_pi());
    cuts.push_back(beta.scaled_pow2(-(g.n - 1)));
  };
  for (const auto& beta : phase.breakpoints()) add_preimages(beta);
  for (const auto& beta : mag2.breakpoints()) add_preimages(beta);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (const auto& piece : triple.pieces()) {
    std::vector<RationalPi> local{piece.lo};
    for (const auto& c : cuts)
      if (piece.lo < c && c < piece.hi) local.push_back(c);
    local.push_back(piece.hi);
    for (size_t i = 0; i + 1 < local.size(); ++i) {
      Interval cell{local[i], local[i + 1]};
      RationalPi mid((cell.lo.coeff + cell.hi.coeff) / 2);
      PhasePi t1 = phase.value_at(mid);
      PhasePi t2 = phase.value_at((mid - two_pi()).scaled_pow2(g.n - 1));
      PhasePi t3 = phase.value_at(mid - two_pi());
      PhasePi t4 = phase.value_at(mid.scaled_pow2(g.n - 1));
      OddPiWitness odd = phase_sum_is_odd_pi(t1, t2, t3, t4);
      if (!odd.is_odd_pi) {
        w.valid = false;
        w.violation = cell;
        return w;
      }
      w.cells.push_back({cell, odd.m});
    }
  }
  w.valid = true;
  return w;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Gamma: return "gamma";
    case Family::MsfA: return "msf-a";
    case Family::MsfB: return "msf-b";
    case Family::PsiN: return "psi-sixone";
    case Family::WN: return "w-sixtwo";
    case Family::Shannon: return "shannon";
  }
  throw std::logic_error("unreachable");
}

std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::Gamma, Family::MsfA, Family::MsfB, Family::PsiN,
                   Family::WN, Family::Shannon})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

FrequencyWavelet build_family(Family f, int n, int p) {
  FrequencyWavelet w;
  w.family = family_name(f);

  if (f == Family::Shannon) {
    w.mag2 = StepProfile::indicator(shannon_set());
    w.phase = zero_phase(w.mag2.support());
    // The Shannon support happens to sit inside the n = 2 skeleton, which
    // makes the window checks applicable to it.
    if (w.mag2.support().subset_of(SnGeometry::make(2).sn())) w.n = 2;
    return w;
  }

  if (n < 3) throw std::invalid_argument("family needs n >= 3");
  SnGeometry g = SnGeometry::make(n);
  w.param_n = n;

  switch (f) {
    case Family::Gamma: {
      w.mag2 = extend_bell(g, StepProfile());
      w.phase = zero_phase(w.mag2.support());
      w.n = n;
      break;
    }
    case Family::MsfA: {
      StepProfile bell2 = StepProfile::indicator(
          IntervalSet::single({g.e, RationalPi::of(1)}));
      w.mag2 = extend_bell(g, bell2);
      w.phase = zero_phase(w.mag2.support());
      w.n = n;
      break;
    }
    case Family::MsfB: {
      long pmax = (1L << (n - 1)) - 2;
      if (p < 1 || p > pmax)
        throw std::invalid_argument("msf-b needs 1 <= p <= 2^(n-1)-2");
      mpz_class den = (mpz_class(1) << n) - 1;
      Rational u(2 * p + 1, den);   // (2p+1)/(2^n-1)
      Rational v(2 * (p + 1), den); // 2(p+1)/(2^n-1)
      u.canonicalize();
      v.canonicalize();
      RationalPi kminus_hi = RationalPi(u - 1);          // -(1-u)*pi
      RationalPi kminus_lo = RationalPi((u - 1) * 2);    // -2(1-u)*pi
      RationalPi kp1_lo = RationalPi(v);
      RationalPi kp1_hi = RationalPi(u * 2);
      RationalPi kp2_lo = kp1_hi.scaled_pow2(n - 1);     // 2^n(2p+1)/(2^n-1)
      RationalPi kp2_hi = kp1_lo.scaled_pow2(n);         // 2^{n+1}(p+1)/(2^n-1)
      w.mag2 = StepProfile::indicator(IntervalSet::from_pieces(
          {{kminus_lo, kminus_hi}, {kp1_lo, kp1_hi}, {kp2_lo, kp2_hi}}));
      w.phase = zero_phase(w.mag2.support());
      w.param_p = p;
      if (w.mag2.support().subset_of(g.sn())) w.n = n;
      break;
    }
    case Family::PsiN: {
      RationalPi shift_half = RationalPi(rat_pow2(Rational(1), n - 1));  // 2^{n-1}pi
      RationalPi shift_full = RationalPi(rat_pow2(Rational(1), n));      // 2^n pi
      RationalPi ah = g.a.scaled_pow2(-1), eh = g.e.scaled_pow2(-1);
      Rational one(1), half(1, 2);
      w.mag2 = StepProfile::from_pieces({
          {{-g.b, -g.a}, one},
          {{ah, eh}, half},
          {{g.a, g.e}, half},
          {{g.c, ah + shift_half}, one},
          {{ah + shift_half, eh + shift_half}, half},
          {{eh + shift_half, g.d}, one},
          {{g.a + shift_full, g.e + shift_full}, half},
      });
      w.phase = canonical_phase(
          w.mag2.support(),
          IntervalSet::single({g.a + shift_full, g.e + shift_full}));
      break;  // support escapes S_n, so w.n stays unset
    }
    case Family::WN: {
      StepProfile bell2 = StepProfile::constant_on(
          IntervalSet::single({g.e, RationalPi::of(1)}), Rational(1, 2));
      w.mag2 = extend_bell(g, bell2);
      w.phase = canonical_phase(
          w.mag2.support(),
          IntervalSet::single({g.e, RationalPi::of(1)}));
      w.n = n;
      break;
    }
    case Family::Shannon:
      throw std::logic_error("unreachable");
  }
  return w;
}

FrequencyWavelet from_custom_bell(const SnGeometry& g,
                                  const StepProfile& bell2) {
  FrequencyWavelet w;
  w.family = "custom";
  w.param_n = g.n;
  w.mag2 = extend_bell(g, bell2);
  w.phase = canonical_phase(w.mag2.support(), strict_cells(bell2));
  w.n = g.n;
  return w;
}

Candidate random_candidate(const SnGeometry& g, std::uint64_t seed,
                           CandidateKind kind, bool even_bell) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::uint64_t bound) -> std::uint64_t {
    return rng() % bound;  // deterministic across platforms; bias harmless
  };
  auto frac = [](unsigned long num, unsigned long den) {
    Rational q(num, den);
    q.canonicalize();  // mpq_class(num, den) keeps the raw pair otherwise
    return q;
  };

  // Random partition of the generation window into 1..4 cells with values
  // in {0, 1/16, ..., 1}. For the even variant the window is [e, pi) and the
  // right half is the mirror complement.
  Interval window = even_bell ? Interval{g.e, RationalPi::of(1)}
                              : g.bell_window();
  Rational len = window.hi.coeff - window.lo.coeff;
  std::size_t cells = 1 + draw(4);
  std::set<std::uint64_t> ticks;
  while (ticks.size() + 1 < cells) ticks.insert(1 + draw(63));
  std::vector<RationalPi> cuts{window.lo};
  for (std::uint64_t t : ticks)
    cuts.push_back(RationalPi(window.lo.coeff + len * frac(t, 64)));
  cuts.push_back(window.hi);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Rational> values;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    values.push_back(frac(draw(17), 16));
  if (kind == CandidateKind::BrokenV) {
    // The phase break needs a nonempty triple intersection, i.e. at least
    // one strict cell.
    bool strict = false;
    for (const auto& v : values) strict = strict || (v > 0 && v < 1);
    if (!strict) values[draw(values.size())] = frac(1 + draw(15), 16);
  }

  std::vector<StepPiece> bell_pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    bell_pieces.push_back({{cuts[i], cuts[i + 1]}, values[i]});
  if (even_bell) {
    // Mirror through 2pi - x: value on [2pi-h, 2pi-l) is 1 - value on [l, h).
    std::vector<StepPiece> mirrored;
    for (const auto& p : bell_pieces)
      mirrored.push_back({{two_pi() - p.span.hi, two_pi() - p.span.lo},
                          Rational(1) - p.value});
    bell_pieces.insert(bell_pieces.end(), mirrored.begin(), mirrored.end());
  }
  StepProfile bell2 = StepProfile::from_pieces(std::move(bell_pieces));

  Candidate cand;
  cand.w = from_custom_bell(g, bell2);
  cand.w.family = "random";
  cand.w.seed = seed;

  switch (kind) {
    case CandidateKind::Valid:
      break;
    case CandidateKind::BrokenIii: {
      // Perturb the first refinement cell of [c, d); this breaks the window
      // pairing b^2(x) + b^2(2^{n-1} x) = 1 there.
      RationalPi cell_hi = g.d;
      for (const auto& beta : cand.w.mag2.breakpoints())
        if (g.c < beta && beta < cell_hi) cell_hi = beta;
      Interval cell{g.c, cell_hi};
      Rational v = cand.w.mag2.value_at(
          RationalPi((cell.lo.coeff + cell.hi.coeff) / 2));
      Rational eps = v < 1 ? (Rational(1) - v) / 2 : Rational(-1, 2);
      cand.w.mag2 = cand.w.mag2.add(
          StepProfile::constant_on(IntervalSet::single(cell), eps));
      cand.w.phase = canonical_phase(cand.w.mag2.support(),
                                     strict_cells(bell2));
      cand.w.notes = "broken-iii";
      cand.marked_cell = cell;
      break;
    }
    case CandidateKind::BrokenV: {
      cand.w.phase = zero_phase(cand.w.mag2.support());
      cand.w.notes = "broken-v";
      cand.marked_cell = strict_cells(bell2).pieces().front();
      break;
    }
  }
  return cand;
}

}  // namespace blwave
