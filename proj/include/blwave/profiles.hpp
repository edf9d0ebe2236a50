#pragma once

#include <span>
#include <vector>

#include "blwave/frequency_sets.hpp"

namespace blwave {

// Piecewise-constant rational-valued function with half-open pieces.
// Normal form: pieces sorted, pairwise disjoint, zero-valued pieces dropped,
// adjacent pieces with equal values merged. Everything off the pieces is 0,
// so profile equality is function equality (a.e., which the half-open
// convention makes exact).
struct StepPiece {
  Interval span;
  Rational value;
  bool operator==(const StepPiece& o) const {
    return span == o.span && value == o.value;
  }
};

class StepProfile {
 public:
  StepProfile() = default;
  // Throws std::invalid_argument if the input pieces overlap.
  static StepProfile from_pieces(std::vector<StepPiece> pieces);
  static StepProfile indicator(const IntervalSet& s);
  static StepProfile constant_on(const IntervalSet& s, const Rational& v);

  const std::vector<StepPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  Rational value_at(const RationalPi& x) const;
  IntervalSet support() const;
  RationalPi integral() const;  // sum of value * length, a multiple of pi

  // Pullbacks: the returned profile r satisfies the stated identity.
  StepProfile pullback_dilate(int j) const;                // r(x) = p(2^j x)
  StepProfile pullback_translate(const RationalPi& t) const;  // r(x) = p(x+t)
  StepProfile pullback_negate() const;                     // r(x) = p(-x)

  StepProfile add(const StepProfile& o) const;
  StepProfile scale(const Rational& r) const;
  StepProfile restrict_to(const IntervalSet& s) const;
  StepProfile restrict_to(const Interval& iv) const {
    return restrict_to(IntervalSet::single(iv));
  }

  // True iff the profile equals v at every point of the window.
  bool equals_const_on(const Rational& v, const Interval& window) const;
  // All piece values lie in [lo, hi] (the implicit 0 outside the support is
  // not considered).
  bool values_within(const Rational& lo, const Rational& hi) const;

  std::vector<RationalPi> breakpoints() const;

  bool operator==(const StepProfile& o) const { return pieces_ == o.pieces_; }

 private:
  std::vector<StepPiece> pieces_;
};

// Piecewise-constant phase. Unlike StepProfile, pieces with zero turns are
// kept: the piece list is the declared domain, and value_at returns 0
// outside it.
struct PhasePiece {
  Interval span;
  PhasePi turns;
  bool operator==(const PhasePiece& o) const {
    return span == o.span && turns == o.turns;
  }
};

class PhaseProfile {
 public:
  PhaseProfile() = default;
  static PhaseProfile from_pieces(std::vector<PhasePiece> pieces);

  const std::vector<PhasePiece>& pieces() const { return pieces_; }
  PhasePi value_at(const RationalPi& x) const;
  IntervalSet domain() const;
  bool covers(const IntervalSet& s) const { return s.subset_of(domain()); }

  PhaseProfile pullback_dilate(int j) const;
  PhaseProfile pullback_translate(const RationalPi& t) const;
  PhaseProfile pullback_negate() const;
  PhaseProfile restrict_to(const IntervalSet& s) const;

  std::vector<RationalPi> breakpoints() const;

  bool operator==(const PhaseProfile& o) const { return pieces_ == o.pieces_; }

 private:
  std::vector<PhasePiece> pieces_;
};

// Common refinement of several profiles: cuts[0] < ... < cuts[m] and for
// each cell [cuts[i], cuts[i+1]) the value of every input profile. Cells
// where all profiles vanish are kept only between the outermost breakpoints.
struct Refinement {
  std::vector<RationalPi> cuts;
  std::vector<std::vector<Rational>> values;  // values[cell][profile]
  size_t cell_count() const { return cuts.empty() ? 0 : cuts.size() - 1; }
  Interval cell(size_t i) const { return {cuts[i], cuts[i + 1]}; }
};
Refinement common_refinement(std::span<const StepProfile> profiles);

// Sum over the translation lattice: q(x) = sum_k p(x + 2k*pi) on [0, 2*pi).
// Finite because p has bounded support; q is one period of a 2*pi-periodic
// function.
StepProfile translation_lattice_sum(const StepProfile& p);

// Sum over the dyadic lattice: rho(x) = sum_{j in Z} p(2^j x), evaluated on
// the representative bands [alpha, 2*alpha) and [-2*alpha, -alpha) where
// alpha is the smallest positive |endpoint| of the support. rho determines
// the full dyadic sum by rho(2x) = rho(x). Throws std::domain_error when the
// support touches 0 or is empty on a side with the flag set.
struct DyadicBands {
  RationalPi alpha;
  StepProfile pos;  // on [alpha, 2*alpha)
  StepProfile neg;  // on [-2*alpha, -alpha)
};
DyadicBands dyadic_lattice_sum(const StepProfile& p);

}  // namespace blwave
