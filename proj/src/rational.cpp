#include "blwave/rational.hpp"

namespace blwave {

Rational rat_from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rational& q) {
  return q.get_str();
}

Rational rat_pow2(const Rational& q, int j) {
  Rational r;
  if (j >= 0)
    mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(j));
  else
    mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-j));
  return r;
}

bool rat_is_integer(const Rational& q) {
  return q.get_den() == 1;
}

long rat_to_long(const Rational& q) {
  if (!rat_is_integer(q)) throw std::domain_error("not an integer: " + rat_to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::domain_error("integer overflow: " + rat_to_string(q));
  return q.get_num().get_si();
}

double rat_to_double(const Rational& q) {
  return q.get_d();
}

int floor_log2(const Rational& x) {
  if (x <= 0) throw std::domain_error("floor_log2 needs a positive argument");
  // Start from the bit-length estimate, then correct by exact comparison.
  long est = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  int k = static_cast<int>(est);
  while (rat_pow2(Rational(1), k) > x) --k;
  while (rat_pow2(Rational(1), k + 1) <= x) ++k;
  return k;
}

}  // namespace blwave
