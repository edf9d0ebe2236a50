#include <doctest.h>

#include <blwave/scalars.hpp>
#include <blwave/zero_sum.hpp>

#include <cmath>
#include <vector>

#include "test_util.hpp"

using namespace blwave;

TEST_CASE("rational-pi arithmetic is exact") {
  CHECK(rp(4, 7).scaled_pow2(2) == rp(16, 7));
  CHECK(rp(16, 7).scaled_pow2(-2) == rp(4, 7));
  CHECK(rp(6, 7) + rp(-2) == rp(-8, 7));
  CHECK(rp(24, 7) - rp(8) == rp(-32, 7));
  CHECK(-rp(3, 5) == rp(-3, 5));
  CHECK(rp(3, 5).scaled(rq(5, 3)) == rp(1));

  CHECK(rp(1, 3) < rp(1, 2));
  CHECK(rp(-1, 2) < rp(1, 3));
  CHECK(rp(2, 4) == rp(1, 2));  // canonicalized
  CHECK(rp(7, 7) >= rp(1));

  CHECK(rp(24, 7).str() == "24/7");
  CHECK(rp(-3).str() == "-3");
  CHECK(RationalPi::parse("24/7") == rp(24, 7));
  CHECK(RationalPi::parse("-3") == rp(-3));
  CHECK(rp(1, 2).to_double() == doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("square roots multiply through the radicand") {
  auto h = SqrtRational::of(rq(1, 2));
  CHECK((h * h).square() == rq(1, 4));
  CHECK(SqrtRational::of(rq(0)).is_zero());
  CHECK_FALSE(h.is_zero());
  CHECK(SqrtRational::of(rq(2)).to_double() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(SqrtRational::of(rq(-1)), std::domain_error);
}

TEST_CASE("phases reduce into [0, 2) turns") {
  CHECK(PhasePi::of(rq(5, 2)).turns == rq(1, 2));
  CHECK(PhasePi::of(rq(-1, 4)).turns == rq(7, 4));
  CHECK(PhasePi::of(rq(2)).turns == rq(0));
  CHECK(PhasePi::of(rq(-6)).is_zero());

  auto a = PhasePi::of(rq(3, 2));
  auto b = PhasePi::of(rq(3, 4));
  CHECK((a + b).turns == rq(1, 4));
  CHECK((a - b).turns == rq(3, 4));
  CHECK((-b).turns == rq(5, 4));
  CHECK(a.antipode().turns == rq(1, 2));
  CHECK(PhasePi::of(rq(1, 2)).radians() ==
        doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("odd-pi witness on four-phase sums") {
  auto pi = PhasePi::of(rq(1));
  auto zero = PhasePi{};
  auto half = PhasePi::of(rq(1, 2));
  auto three_half = PhasePi::of(rq(3, 2));

  auto w = phase_sum_is_odd_pi(pi, zero, zero, zero);
  CHECK(w.is_odd_pi);
  CHECK(w.m == 0);

  CHECK_FALSE(phase_sum_is_odd_pi(zero, zero, zero, zero).is_odd_pi);
  CHECK_FALSE(phase_sum_is_odd_pi(pi, pi, zero, zero).is_odd_pi);
  CHECK_FALSE(phase_sum_is_odd_pi(PhasePi::of(rq(1, 3)), zero, zero, zero)
                  .is_odd_pi);

  w = phase_sum_is_odd_pi(half, half, zero, zero);
  CHECK(w.is_odd_pi);
  CHECK(w.m == 0);

  w = phase_sum_is_odd_pi(three_half, three_half, zero, zero);
  CHECK(w.is_odd_pi);
  CHECK(w.m == 1);

  // Subtracted slots count negatively; the witness can be negative.
  w = phase_sum_is_odd_pi(zero, zero, half, half);
  CHECK(w.is_odd_pi);
  CHECK(w.m == -1);

  w = phase_sum_is_odd_pi(zero, zero, three_half, three_half);
  CHECK(w.is_odd_pi);
  CHECK(w.m == -2);
}

TEST_CASE("zero-sum decisions: rational-direction cases are proofs") {
  std::vector<PhasedRadical> terms;
  auto dec = decide_zero_sum(terms);
  CHECK(dec.is_zero);
  CHECK(dec.exact);
  CHECK(dec.magnitude == 0.0);

  // sqrt(1/2) - sqrt(1/2) = 0.
  terms = {{rq(1, 2), PhasePi{}}, {rq(1, 2), PhasePi::of(rq(1))}};
  dec = decide_zero_sum(terms);
  CHECK(dec.is_zero);
  CHECK(dec.exact);

  // i - i = 0 via quarter turns.
  terms = {{rq(1), PhasePi::of(rq(1, 2))}, {rq(1), PhasePi::of(rq(3, 2))}};
  dec = decide_zero_sum(terms);
  CHECK(dec.is_zero);
  CHECK(dec.exact);

  // sqrt(2) - sqrt(8) = -sqrt(2): same squarefree key, exact nonzero.
  terms = {{rq(2), PhasePi{}}, {rq(8), PhasePi::of(rq(1))}};
  dec = decide_zero_sum(terms);
  CHECK_FALSE(dec.is_zero);
  CHECK(dec.exact);
  CHECK(dec.magnitude == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // sqrt(2) - sqrt(3): distinct squarefree keys are independent over Q.
  terms = {{rq(2), PhasePi{}}, {rq(3), PhasePi::of(rq(1))}};
  dec = decide_zero_sum(terms);
  CHECK_FALSE(dec.is_zero);
  CHECK(dec.exact);
  CHECK(dec.magnitude ==
        doctest::Approx(std::sqrt(3.0) - std::sqrt(2.0)).epsilon(1e-12));

  // Zero radicands are ignored.
  terms = {{rq(0), PhasePi::of(rq(1, 3))}};
  dec = decide_zero_sum(terms);
  CHECK(dec.is_zero);
  CHECK(dec.exact);
}

TEST_CASE("zero-sum decisions: irrational directions") {
  // Cube roots of unity sum to zero, but only the 200-bit evaluation says so.
  std::vector<PhasedRadical> terms = {{rq(1), PhasePi{}},
                                      {rq(1), PhasePi::of(rq(2, 3))},
                                      {rq(1), PhasePi::of(rq(4, 3))}};
  auto dec = decide_zero_sum(terms);
  CHECK(dec.is_zero);
  CHECK_FALSE(dec.exact);

  // Same directions, unbalanced weights: 1 + e^{2pi i/3} + 2 e^{4pi i/3}.
  terms = {{rq(1), PhasePi{}},
           {rq(1), PhasePi::of(rq(2, 3))},
           {rq(4), PhasePi::of(rq(4, 3))}};
  dec = decide_zero_sum(terms);
  CHECK_FALSE(dec.is_zero);
  CHECK_FALSE(dec.exact);
  CHECK(dec.magnitude == doctest::Approx(1.0).epsilon(1e-12));

  // Irrational directions that cancel coefficient-wise stay exact.
  terms = {{rq(1), PhasePi{}},
           {rq(1), PhasePi::of(rq(1))},
           {rq(1), PhasePi::of(rq(1, 3))},
           {rq(1), PhasePi::of(rq(4, 3))}};
  dec = decide_zero_sum(terms);
  CHECK(dec.is_zero);
  CHECK(dec.exact);
}

TEST_CASE("square splitting of radicands") {
  mpz_class k, s;
  square_split(72, k, s);
  CHECK(k == 6);
  CHECK(s == 2);

  square_split(1, k, s);
  CHECK(k == 1);
  CHECK(s == 1);

  square_split(12, k, s);
  CHECK(k == 2);
  CHECK(s == 3);

  // A Mersenne prime survives as the squarefree part.
  mpz_class mersenne = (mpz_class(1) << 61) - 1;
  square_split(mersenne, k, s);
  CHECK(k == 1);
  CHECK(s == mersenne);

  // Square of a large prime folds entirely into k.
  mpz_class p31 = (mpz_class(1) << 31) - 1;
  square_split(p31 * p31, k, s);
  CHECK(k == p31);
  CHECK(s == 1);

  CHECK_THROWS_AS(square_split(0, k, s), std::domain_error);
  CHECK_THROWS_AS(square_split(-4, k, s), std::domain_error);
}
