#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace blwave {

// Exact rational scalar. All arithmetic in the library that is not explicitly
// numeric goes through this type.
using Rational = mpq_class;

// Parses "p", "-p", or "p/q" (lowest terms not required on input).
Rational rat_from_string(const std::string& s);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rational& q);

// q * 2^j for any sign of j, exact.
Rational rat_pow2(const Rational& q, int j);

bool rat_is_integer(const Rational& q);

// Requires rat_is_integer and a value that fits a long.
long rat_to_long(const Rational& q);

double rat_to_double(const Rational& q);

// floor(log2(x)) for a positive rational x.
int floor_log2(const Rational& x);

}  // namespace blwave
