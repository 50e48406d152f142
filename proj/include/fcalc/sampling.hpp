#pragma once

// Seeded random generators for the property checks and verify commands.

#include "fcalc/element.hpp"
#include "fcalc/upoly.hpp"

#include <random>
#include <string>
#include <vector>

namespace fcalc {

struct ElementShape {
  int max_index = 3;       // generators l_n with |n| <= max_index
  unsigned max_terms = 2;
  unsigned max_factors = 2;
  long max_int_exponent = 2;
  /// Parameters that may appear in exponents and coefficients.
  std::vector<std::string> params = {"r"};
};

Element random_element(std::mt19937_64& rng, const ElementShape& shape = {});
Exponent random_exponent(std::mt19937_64& rng, const ElementShape& shape = {});
Rational random_rational(std::mt19937_64& rng, long max_abs = 3, long max_den = 3);
UPoly random_upoly(std::mt19937_64& rng, unsigned max_degree);

}  // namespace fcalc
