#include "blwave/scalars.hpp"

#include <cmath>

namespace blwave {

double RationalPi::to_double() const {
  return rat_to_double(coeff) * M_PI;
}

double SqrtRational::to_double() const {
  return std::sqrt(rat_to_double(radicand));
}

PhasePi PhasePi::of(const Rational& t) {
  // Reduce t mod 2 into [0, 2).
  Rational two(2);
  Rational q = t / two;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  PhasePi p;
  p.turns = t - Rational(fl) * two;
  p.turns.canonicalize();
  return p;
}

double PhasePi::radians() const {
  return rat_to_double(turns) * M_PI;
}

OddPiWitness phase_sum_is_odd_pi(const PhasePi& p1, const PhasePi& p2,
                                 const PhasePi& p3, const PhasePi& p4) {
  Rational s = p1.turns + p2.turns - p3.turns - p4.turns;  // in (-4, 4)
  OddPiWitness w;
  if (!rat_is_integer(s)) return w;
  long v = rat_to_long(s);
  if ((v % 2 + 2) % 2 != 1) return w;
  w.is_odd_pi = true;
  w.m = (v - 1) / 2;
  return w;
}

}  // namespace blwave
