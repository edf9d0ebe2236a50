#pragma once

#include <blwave/scalars.hpp>
#include <blwave/frequency_sets.hpp>

// Shorthand for building exact test fixtures.
inline blwave::RationalPi rp(long num, long den = 1) {
  return blwave::RationalPi::of(num, den);
}

inline blwave::Interval iv(long n1, long d1, long n2, long d2) {
  return {rp(n1, d1), rp(n2, d2)};
}

inline blwave::Rational rq(long num, long den = 1) {
  blwave::Rational q(num, den);
  q.canonicalize();
  return q;
}
