#include "blwave/profiles.hpp"

#include <algorithm>

namespace blwave {

namespace {

RationalPi midpoint(const Interval& iv) {
  return RationalPi((iv.lo.coeff + iv.hi.coeff) / 2);
}

std::vector<RationalPi> sorted_cuts(const std::vector<RationalPi>& raw) {
  std::vector<RationalPi> cuts = raw;
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Sums an arbitrary collection of possibly-overlapping step pieces.
StepProfile accumulate(const std::vector<StepPiece>& raw) {
  std::vector<RationalPi> ends;
  for (const auto& p : raw) {
    if (p.span.empty()) continue;
    ends.push_back(p.span.lo);
    ends.push_back(p.span.hi);
  }
  if (ends.empty()) return StepProfile();
  auto cuts = sorted_cuts(ends);
  std::vector<StepPiece> cells;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Interval cell{cuts[i], cuts[i + 1]};
    RationalPi mid = midpoint(cell);
    Rational v(0);
    for (const auto& p : raw)
      if (p.span.contains(mid)) v += p.value;
    if (v != 0) cells.push_back({cell, v});
  }
  return StepProfile::from_pieces(std::move(cells));
}

}  // namespace

StepProfile StepProfile::from_pieces(std::vector<StepPiece> pieces) {
  std::erase_if(pieces, [](const StepPiece& p) {
    return p.span.empty() || p.value == 0;
  });
  std::sort(pieces.begin(), pieces.end(),
            [](const StepPiece& x, const StepPiece& y) {
              return x.span.lo < y.span.lo;
            });
  StepProfile out;
  for (auto& p : pieces) {
    if (!out.pieces_.empty()) {
      StepPiece& last = out.pieces_.back();
      if (p.span.lo < last.span.hi)
        throw std::invalid_argument("overlapping step pieces");
      if (p.span.lo == last.span.hi && p.value == last.value) {
        last.span.hi = p.span.hi;
        continue;
      }
    }
    out.pieces_.push_back(std::move(p));
  }
  return out;
}

StepProfile StepProfile::indicator(const IntervalSet& s) {
  return constant_on(s, Rational(1));
}

StepProfile StepProfile::constant_on(const IntervalSet& s, const Rational& v) {
  std::vector<StepPiece> pieces;
  for (const auto& iv : s.pieces()) pieces.push_back({iv, v});
  return from_pieces(std::move(pieces));
}

Rational StepProfile::value_at(const RationalPi& x) const {
  for (const auto& p : pieces_) {
    if (x < p.span.lo) break;
    if (p.span.contains(x)) return p.value;
  }
  return Rational(0);
}

IntervalSet StepProfile::support() const {
  std::vector<Interval> ivs;
  ivs.reserve(pieces_.size());
  for (const auto& p : pieces_) ivs.push_back(p.span);
  return IntervalSet::from_pieces(std::move(ivs));
}

RationalPi StepProfile::integral() const {
  Rational total(0);
  for (const auto& p : pieces_) total += p.value * p.span.length().coeff;
  return RationalPi(total);
}

StepProfile StepProfile::pullback_dilate(int j) const {
  std::vector<StepPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({{p.span.lo.scaled_pow2(-j), p.span.hi.scaled_pow2(-j)},
                   p.value});
  return from_pieces(std::move(out));
}

StepProfile StepProfile::pullback_translate(const RationalPi& t) const {
  std::vector<StepPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({{p.span.lo - t, p.span.hi - t}, p.value});
  return from_pieces(std::move(out));
}

StepProfile StepProfile::pullback_negate() const {
  std::vector<StepPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({{-p.span.hi, -p.span.lo}, p.value});
  return from_pieces(std::move(out));
}

StepProfile StepProfile::add(const StepProfile& o) const {
  std::vector<StepPiece> raw = pieces_;
  raw.insert(raw.end(), o.pieces_.begin(), o.pieces_.end());
  return accumulate(raw);
}

StepProfile StepProfile::scale(const Rational& r) const {
  if (r == 0) return StepProfile();
  std::vector<StepPiece> out = pieces_;
  for (auto& p : out) p.value *= r;
  return from_pieces(std::move(out));
}

StepProfile StepProfile::restrict_to(const IntervalSet& s) const {
  std::vector<StepPiece> out;
  for (const auto& p : pieces_)
    for (const auto& iv : s.pieces()) {
      Interval cell = intersect(p.span, iv);
      if (!cell.empty()) out.push_back({cell, p.value});
    }
  return from_pieces(std::move(out));
}

bool StepProfile::equals_const_on(const Rational& v,
                                  const Interval& window) const {
  if (window.empty()) return true;
  StepProfile r = restrict_to(window);
  if (v == 0) return r.empty();
  return r.pieces_.size() == 1 && r.pieces_[0].span == window &&
         r.pieces_[0].value == v;
}

bool StepProfile::values_within(const Rational& lo, const Rational& hi) const {
  for (const auto& p : pieces_)
    if (p.value < lo || p.value > hi) return false;
  return true;
}

std::vector<RationalPi> StepProfile::breakpoints() const {
  std::vector<RationalPi> out;
  for (const auto& p : pieces_) {
    out.push_back(p.span.lo);
    out.push_back(p.span.hi);
  }
  return sorted_cuts(out);
}

PhaseProfile PhaseProfile::from_pieces(std::vector<PhasePiece> pieces) {
  std::erase_if(pieces, [](const PhasePiece& p) { return p.span.empty(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const PhasePiece& x, const PhasePiece& y) {
              return x.span.lo < y.span.lo;
            });
  PhaseProfile out;
  for (auto& p : pieces) {
    if (!out.pieces_.empty()) {
      PhasePiece& last = out.pieces_.back();
      if (p.span.lo < last.span.hi)
        throw std::invalid_argument("overlapping phase pieces");
      if (p.span.lo == last.span.hi && p.turns == last.turns) {
        last.span.hi = p.span.hi;
        continue;
      }
    }
    out.pieces_.push_back(std::move(p));
  }
  return out;
}

PhasePi PhaseProfile::value_at(const RationalPi& x) const {
  for (const auto& p : pieces_) {
    if (x < p.span.lo) break;
    if (p.span.contains(x)) return p.turns;
  }
  return PhasePi();
}

IntervalSet PhaseProfile::domain() const {
  std::vector<Interval> ivs;
  ivs.reserve(pieces_.size());
  for (const auto& p : pieces_) ivs.push_back(p.span);
  return IntervalSet::from_pieces(std::move(ivs));
}

PhaseProfile PhaseProfile::pullback_dilate(int j) const {
  std::vector<PhasePiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({{p.span.lo.scaled_pow2(-j), p.span.hi.scaled_pow2(-j)},
                   p.turns});
  return from_pieces(std::move(out));
}

PhaseProfile PhaseProfile::pullback_translate(const RationalPi& t) const {
  std::vector<PhasePiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({{p.span.lo - t, p.span.hi - t}, p.turns});
  return from_pieces(std::move(out));
}

PhaseProfile PhaseProfile::pullback_negate() const {
  std::vector<PhasePiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_)
    out.push_back({{-p.span.hi, -p.span.lo}, p.turns});
  return from_pieces(std::move(out));
}

PhaseProfile PhaseProfile::restrict_to(const IntervalSet& s) const {
  std::vector<PhasePiece> out;
  for (const auto& p : pieces_)
    for (const auto& iv : s.pieces()) {
      Interval cell = intersect(p.span, iv);
      if (!cell.empty()) out.push_back({cell, p.turns});
    }
  return from_pieces(std::move(out));
}

std::vector<RationalPi> PhaseProfile::breakpoints() const {
  std::vector<RationalPi> out;
  for (const auto& p : pieces_) {
    out.push_back(p.span.lo);
    out.push_back(p.span.hi);
  }
  return sorted_cuts(out);
}

Refinement common_refinement(std::span<const StepProfile> profiles) {
  std::vector<RationalPi> ends;
  for (const auto& p : profiles)
    for (const auto& b : p.breakpoints()) ends.push_back(b);
  Refinement r;
  if (ends.empty()) return r;
  r.cuts = sorted_cuts(ends);
  for (size_t i = 0; i + 1 < r.cuts.size(); ++i) {
    RationalPi mid = midpoint(Interval{r.cuts[i], r.cuts[i + 1]});
    std::vector<Rational> vals;
    vals.reserve(profiles.size());
    for (const auto& p : profiles) vals.push_back(p.value_at(mid));
    r.values.push_back(std::move(vals));
  }
  return r;
}

StepProfile translation_lattice_sum(const StepProfile& p) {
  RationalPi two_pi = RationalPi::of(2);
  std::vector<StepPiece> chunks;
  for (const auto& piece : p.pieces()) {
    Rational q = piece.span.lo.coeff / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    RationalPi left = RationalPi(Rational(fl) * 2);
    for (; left < piece.span.hi; left = left + two_pi) {
      Interval chunk = intersect(piece.span, {left, left + two_pi});
      if (!chunk.empty())
        chunks.push_back({{chunk.lo - left, chunk.hi - left}, piece.value});
    }
  }
  return accumulate(chunks);
}

static DyadicBands dyadic_bands_at(const StepProfile& p,
                                   const RationalPi& alpha) {
  DyadicBands bands;
  bands.alpha = alpha;
  Interval pos_band{alpha, alpha.scaled_pow2(1)};
  Interval neg_band{-alpha.scaled_pow2(1), -alpha};
  IntervalSet supp = p.support();
  RationalPi lo_abs = *supp.min_abs_gap();
  RationalPi hi_abs = supp.sup_abs();
  // p(2^j x) on the bands can be nonzero only when 2^j*[alpha, 2*alpha)
  // meets [lo_abs, hi_abs] in absolute value.
  int j_lo = floor_log2(lo_abs.coeff / alpha.coeff) - 1;
  int j_hi = floor_log2(hi_abs.coeff / alpha.coeff) + 1;
  std::vector<StepPiece> pos_chunks, neg_chunks;
  for (int j = j_lo; j <= j_hi; ++j) {
    StepProfile pb = p.pullback_dilate(j);
    StepProfile on_pos = pb.restrict_to(pos_band);
    for (const auto& piece : on_pos.pieces()) pos_chunks.push_back(piece);
    StepProfile on_neg = pb.restrict_to(neg_band);
    for (const auto& piece : on_neg.pieces()) neg_chunks.push_back(piece);
  }
  bands.pos = accumulate(pos_chunks);
  bands.neg = accumulate(neg_chunks);
  return bands;
}

DyadicBands dyadic_lattice_sum(const StepProfile& p) {
  if (p.empty()) throw std::domain_error("dyadic sum of the zero profile");
  auto alpha = p.support().min_abs_gap();
  if (!alpha) throw std::domain_error("support touches 0");
  return dyadic_bands_at(p, *alpha);
}

}  // namespace blwave
