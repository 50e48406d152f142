#pragma once

// Exact scalars. Every coefficient in the library is an arbitrary-precision
// rational; no floating point is used anywhere.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fcalc {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p" or "p/q" with an optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace fcalc
