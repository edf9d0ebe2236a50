#include "blwave/zero_sum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>

namespace blwave {

void square_split(const mpz_class& n, mpz_class& k, mpz_class& s) {
  if (n <= 0) throw std::domain_error("square_split needs n > 0");
  k = 1;
  s = 1;
  mpz_class rest = n;
  // Remove small prime factors, collecting squares into k.
  for (unsigned long d = 2; d < (1UL << 20) && d * d <= rest; d == 2 ? d = 3 : d += 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      unsigned long cnt = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
        rest /= d;
        ++cnt;
      }
      for (unsigned long i = 0; i + 1 < cnt; i += 2) k *= d;
      if (cnt % 2) s *= d;
    }
  }
  if (rest == 1) return;
  if (rest < (1UL << 40) || mpz_probab_prime_p(rest.get_mpz_t(), 40)) {
    // rest has no factor < 2^20; if below 2^40 it is prime, and otherwise
    // the primality test certifies the factorization.
    s *= rest;
    return;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    if (mpz_probab_prime_p(r.get_mpz_t(), 40) || r < (1UL << 40)) {
      k *= r;
      return;
    }
  }
  throw std::domain_error("radicand too composite for exact square splitting");
}

namespace {

// Canonical form coef * sqrt(key) with key a squarefree positive integer.
struct CanonicalRadical {
  Rational coef;   // > 0
  mpz_class key;
};

CanonicalRadical canonicalize(const Rational& radicand) {
  // sqrt(p/q) = (1/q) sqrt(p*q); p*q = k^2 s.
  mpz_class pq = radicand.get_num() * radicand.get_den();
  mpz_class k, s;
  square_split(pq, k, s);
  CanonicalRadical c;
  c.coef = Rational(k, radicand.get_den());
  c.coef.canonicalize();
  c.key = s;
  return c;
}

double estimate_magnitude(std::span<const PhasedRadical> terms) {
  mpfr_t re, im, mag, phase, tmp;
  mpfr_inits2(200, re, im, mag, phase, tmp, (mpfr_ptr) nullptr);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (const auto& t : terms) {
    mpfr_set_q(mag, t.radicand.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(mag, mag, MPFR_RNDN);
    mpfr_const_pi(phase, MPFR_RNDN);
    mpfr_set_q(tmp, t.phase.turns.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(phase, phase, tmp, MPFR_RNDN);
    mpfr_cos(tmp, phase, MPFR_RNDN);
    mpfr_mul(tmp, tmp, mag, MPFR_RNDN);
    mpfr_add(re, re, tmp, MPFR_RNDN);
    mpfr_sin(tmp, phase, MPFR_RNDN);
    mpfr_mul(tmp, tmp, mag, MPFR_RNDN);
    mpfr_add(im, im, tmp, MPFR_RNDN);
  }
  mpfr_hypot(mag, re, im, MPFR_RNDN);
  double out = mpfr_get_d(mag, MPFR_RNDN);
  mpfr_clears(re, im, mag, phase, tmp, (mpfr_ptr) nullptr);
  return out;
}

}  // namespace

ZeroSumDecision decide_zero_sum(std::span<const PhasedRadical> terms) {
  // Group by squarefree key; within a group track quarter-turn terms as an
  // exact Gaussian-rational accumulator and other turns as signed multisets
  // over the half-turn representative.
  struct Group {
    Rational re{0}, im{0};                 // from turns with denominator 1, 2
    std::map<Rational, Rational> general;  // turns in [0,1) -> signed coef sum
  };
  std::map<mpz_class, Group> groups;

  for (const auto& t : terms) {
    if (t.radicand == 0) continue;
    if (t.radicand < 0) throw std::domain_error("negative radicand");
    CanonicalRadical c = canonicalize(t.radicand);
    Group& grp = groups[c.key];
    const Rational& turns = t.phase.turns;  // in [0, 2)
    if (turns.get_den() <= 2) {
      if (turns == 0) grp.re += c.coef;
      else if (turns == 1) grp.re -= c.coef;
      else if (turns == Rational(1, 2)) grp.im += c.coef;
      else grp.im -= c.coef;  // 3/2
    } else {
      // e^{i pi (t+1)} = -e^{i pi t}: reduce to [0, 1) with a sign.
      Rational rep = turns;
      Rational coef = c.coef;
      if (rep >= 1) {
        rep -= 1;
        coef = -coef;
      }
      grp.general[rep] += coef;
    }
  }

  bool all_zero = true;
  bool residual_general = false;
  for (auto& [key, grp] : groups) {
    bool general_zero = true;
    for (auto& [rep, coef] : grp.general)
      if (coef != 0) general_zero = false;
    if (!general_zero) {
      all_zero = false;
      residual_general = true;
    } else if (grp.re != 0 || grp.im != 0) {
      all_zero = false;
    }
  }

  ZeroSumDecision d;
  if (all_zero) {
    // Every group cancelled identically: exact zero.
    d.is_zero = true;
    return d;
  }
  if (!residual_general) {
    // Nonzero Gaussian-rational combination of sqrt of distinct squarefree
    // integers: exactly nonzero by linear independence over Q.
    d.is_zero = false;
    d.magnitude = estimate_magnitude(terms);
    return d;
  }
  // Leftover irrational-direction units: no exact decision procedure here.
  d.exact = false;
  d.magnitude = estimate_magnitude(terms);
  d.is_zero = d.magnitude < 1e-50;
  return d;
}

}  // namespace blwave
