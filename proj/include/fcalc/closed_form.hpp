#pragma once

// Direct evaluation of the formal analytic expansions of (x+y)^e,
// log(x+y), (log(x+y))^r and l_n(x+y)^r, independent of the derivation
// engine.

#include "fcalc/exponent.hpp"
#include "fcalc/yseries.hpp"

#include <stdexcept>
#include <string>

namespace fcalc {

/// sum_n binom(e, n) x^{e-n} y^n.
YSeries binomial_series(const Exponent& e, unsigned order);

/// log x + sum_{i>=1} (-1)^{i-1} y^i / (i x^i).
YSeries log_series(unsigned order);

/// (log x + log(1 + y/x))^r expanded binomially in powers of the inner series.
YSeries log_power_series(const Exponent& r, unsigned order);

enum class IteratedLogFormula {
  /// Sum over j_0, ..., j_n of products of bracket numbers.
  Bracket,
  /// Sum over chains 1 <= j_n <= ... <= j_0 = k weighted by S(j_n, ..., j_0).
  SRecursion,
  /// Sum over j_0 + ... + j_n = k weighted by products of (j_i; alpha_{i+1}).
  Paren,
};

/// l_n(x+y)^r for n >= 1 via the selected closed formula.
YSeries iterated_log_series(int n, const Exponent& r, unsigned order, IteratedLogFormula formula);

class UnsupportedClosedForm : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// e^{y d/dx} a assembled from the closed forms, one generator power at a
/// time (using the automorphism property). Generators l_n with n < 0 have no
/// closed form here and raise UnsupportedClosedForm.
YSeries closed_form_expand(const Element& a, unsigned order);

}  // namespace fcalc
