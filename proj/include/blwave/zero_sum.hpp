#pragma once

#include <span>
#include <vector>

#include "blwave/scalars.hpp"

namespace blwave {

// One term of a cancellation sum: sqrt(radicand) * e^{i * pi * turns}.
struct PhasedRadical {
  Rational radicand;  // >= 0
  PhasePi phase;
};

// Decision for sum of terms = 0.
//   exact = true: the verdict is a proof (linear independence of square
//     roots of distinct squarefree integers over Q, plus pair cancellation).
//   exact = false: 200-bit floating evaluation against a 1e-50 threshold;
//     callers must flag the enclosing verdict as numeric-assisted.
struct ZeroSumDecision {
  bool is_zero = false;
  bool exact = true;
  double magnitude = 0.0;  // estimate of |sum| (0 when exactly zero)
};

ZeroSumDecision decide_zero_sum(std::span<const PhasedRadical> terms);

// Writes n = k^2 * s with s squarefree. Exact for any n whose non-smooth
// part (after removing primes < 2^20) is prime, a perfect square, or 1;
// throws std::domain_error otherwise (never reached by rationals built from
// small numerators/denominators).
void square_split(const mpz_class& n, mpz_class& k, mpz_class& s);

}  // namespace blwave
