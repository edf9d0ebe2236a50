#pragma once

#include <set>

#include "blwave/builder.hpp"

namespace blwave {

// D(x) = sum_{j>=1} sum_k mag2(2^j (x + 2k pi)) on the canonical period
// [-pi, pi); 2*pi-periodic extension understood. For band-limited profiles
// with rho constant on the dyadic bands the sum collapses to a finite step
// profile; the gap pieces (value 0) are implicit as everywhere else.
struct DimensionProfile {
  StepProfile profile;           // on [-pi, pi)
  bool integer_valued = false;
  Rational max_value;
  std::set<Rational> attained;   // values taken on [-pi, pi), incl. 0 on gaps
  bool is_mra = false;           // profile == 1 a.e.
};

// Ladder of the skeleton endpoints: p_l = 2^l a_n, q_l = 2^{l-1} e_n, so that
// p_0 = a, p_1 = b, p_n = d, q_1 = e, q_n = c and p_l < q_{l+1} < p_{l+1}.
struct DyadicLadder {
  int n = 0;
  RationalPi p(int l) const;
  RationalPi q(int l) const;
};

// Throws std::domain_error when the support touches 0 or when the dyadic
// band sums are non-constant (no finite step representation on [-pi, pi)).
DimensionProfile dimension_function(const FrequencyWavelet& w);

// The shared profile of every wavelet supported in the n-th skeleton:
// n-1 near 0, then r-1 on the dyadic rungs, 0 on [a, e), 1 on [e, pi),
// mirrored evenly. Throws std::invalid_argument for n < 3.
DimensionProfile closed_form_dn(int n);

// |phi-hat|^2 = sum_{j>=1} mag2(2^j x) on the whole line. Same finiteness
// requirement as dimension_function.
StepProfile scaling_modulus_sq(const FrequencyWavelet& w);

struct MraVerdict {
  bool is_mra = false;
  // An inclusion-maximal cell where D != 1 (present iff !is_mra), zero cells
  // on the positive axis preferred.
  std::optional<StepPiece> evidence;
};
MraVerdict mra_verdict(const FrequencyWavelet& w);

}  // namespace blwave
