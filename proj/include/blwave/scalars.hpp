#pragma once

#include <compare>
#include <string>

#include "blwave/rational.hpp"

namespace blwave {

// A real number of the form coeff * pi, coeff rational. Frequencies,
// interval endpoints and measures in this library are all of this form.
struct RationalPi {
  Rational coeff;

  RationalPi() : coeff(0) {}
  explicit RationalPi(Rational c) : coeff(std::move(c)) {}
  static RationalPi of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();  // mpq_class(num, den) keeps the raw pair otherwise
    return RationalPi(q);
  }

  RationalPi operator+(const RationalPi& o) const { return RationalPi(coeff + o.coeff); }
  RationalPi operator-(const RationalPi& o) const { return RationalPi(coeff - o.coeff); }
  RationalPi operator-() const { return RationalPi(-coeff); }
  RationalPi scaled(const Rational& r) const { return RationalPi(coeff * r); }
  // Value * 2^j, exact for either sign of j.
  RationalPi scaled_pow2(int j) const { return RationalPi(rat_pow2(coeff, j)); }

  bool operator==(const RationalPi& o) const { return coeff == o.coeff; }
  bool operator!=(const RationalPi& o) const { return coeff != o.coeff; }
  bool operator<(const RationalPi& o) const { return coeff < o.coeff; }
  bool operator<=(const RationalPi& o) const { return coeff <= o.coeff; }
  bool operator>(const RationalPi& o) const { return coeff > o.coeff; }
  bool operator>=(const RationalPi& o) const { return coeff >= o.coeff; }

  double to_double() const;
  std::string str() const { return rat_to_string(coeff); }  // coefficient of pi
  static RationalPi parse(const std::string& s) { return RationalPi(rat_from_string(s)); }
};

// sqrt(radicand) with radicand a nonnegative rational; closed under products.
struct SqrtRational {
  Rational radicand;

  static SqrtRational of(const Rational& r) {
    if (r < 0) throw std::domain_error("negative radicand");
    return SqrtRational{r};
  }
  SqrtRational operator*(const SqrtRational& o) const { return SqrtRational{radicand * o.radicand}; }
  Rational square() const { return radicand; }
  bool is_zero() const { return radicand == 0; }
  bool operator==(const SqrtRational& o) const { return radicand == o.radicand; }
  double to_double() const;
};

// An angle turns * pi with turns reduced into [0, 2). Addition is mod 2pi.
struct PhasePi {
  Rational turns;

  PhasePi() : turns(0) {}
  static PhasePi of(const Rational& t);
  PhasePi operator+(const PhasePi& o) const { return of(turns + o.turns); }
  PhasePi operator-(const PhasePi& o) const { return of(turns - o.turns); }
  PhasePi operator-() const { return of(-turns); }
  // Phase shifted by pi (multiplication of the unit by -1).
  PhasePi antipode() const { return of(turns + 1); }
  bool is_zero() const { return turns == 0; }
  bool operator==(const PhasePi& o) const { return turns == o.turns; }
  double radians() const;
};

// Decides whether p1 + p2 - p3 - p4 is an odd multiple of pi, and if so
// reports the integer m with (sum of the reduced representatives) = (2m+1)pi.
struct OddPiWitness {
  bool is_odd_pi = false;
  long m = 0;
};
OddPiWitness phase_sum_is_odd_pi(const PhasePi& p1, const PhasePi& p2,
                                 const PhasePi& p3, const PhasePi& p4);

}  // namespace blwave
