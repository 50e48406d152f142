#include "fcalc/closed_form.hpp"
#include "fcalc/derivation.hpp"
#include "support.hpp"

using namespace fcalc;

namespace {
constexpr IteratedLogFormula kAll[] = {IteratedLogFormula::Bracket, IteratedLogFormula::SRecursion,
                                       IteratedLogFormula::Paren};
}

TEST_CASE("binomial series") {
  // (x+y)^3 terminates.
  CHECK(binomial_series(3, 5) == series({x_(3), x_(2) * 3L, x_() * 3L, Element(1L), Element(), Element()}));
  CHECK(binomial_series(-1, 3) == series({x_(-1), -x_(-2), x_(-3), -x_(-4)}));
  const Element r = Element(PP("r"));
  CHECK(binomial_series(P("r"), 2) ==
        series({x_(P("r")), x_(P("r") - Exponent(1)) * PP("r"),
                x_(P("r") - Exponent(2)) * ((PP("r") * PP("r") - PP("r")) * Q(1, 2))}));
}

TEST_CASE("binomial series agrees with the engine") {
  for (unsigned n = 0; n <= 8; ++n) CHECK(binomial_series(P("r"), n) == exp_apply(dx_spec(), x_(P("r")), n));
  CHECK(binomial_series(Q(1, 2), 6) == exp_apply(dx_spec(), x_(Q(1, 2)), 6));
}

TEST_CASE("binomial series specializes to integer exponents") {
  for (long m = 0; m <= 6; ++m) {
    const YSeries s = binomial_series(P("r"), 6).map(
        [m](const Element& c) { return substitute_param(c, "r", m); });
    CHECK(s == binomial_series(m, 6));
  }
}

TEST_CASE("exponent addition law") {
  CHECK(binomial_series(P("r"), 6) * binomial_series(P("s"), 6) == binomial_series(P("r") + P("s"), 6));
}

TEST_CASE("log series") {
  CHECK(log_series(0) == series({log_()}));
  CHECK(log_series(3) == series({log_(), x_(-1), x_(-2) * Q(-1, 2), x_(-3) * Q(1, 3)}));
  CHECK(log_series(3) == exp_apply(dx_spec(), log_(), 3));
}

TEST_CASE("log power series") {
  CHECK(log_power_series(1, 5) == log_series(5));
  CHECK(log_power_series(2, 1) == series({log_(2), log_() * x_(-1) * 2L}));
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(log_power_series(P("r"), n) == exp_apply(dx_spec(), log_(P("r")), n));
}

TEST_CASE("the three iterated-log formulas agree") {
  for (int n = 1; n <= 3; ++n) {
    const YSeries bracket = iterated_log_series(n, P("r"), 5, IteratedLogFormula::Bracket);
    CHECK(bracket == iterated_log_series(n, P("r"), 5, IteratedLogFormula::SRecursion));
    CHECK(bracket == iterated_log_series(n, P("r"), 5, IteratedLogFormula::Paren));
  }
}

TEST_CASE("iterated-log formulas against log_power_series and the engine") {
  for (unsigned order = 0; order <= 4; ++order)
    for (auto f : kAll) CHECK(iterated_log_series(1, P("r"), order, f) == log_power_series(P("r"), order));
  for (unsigned order = 0; order <= 3; ++order)
    for (auto f : kAll) CHECK(iterated_log_series(2, 1, order, f) == exp_apply(dx_spec(), gen(2), order));
  for (int n = 1; n <= 3; ++n)
    for (auto f : kAll)
      CHECK(iterated_log_series(n, P("r"), 6, f) == exp_apply(dx_spec(), gen(n, P("r")), 6));
}

TEST_CASE("iterated-log series rejects n < 1") {
  CHECK_THROWS_AS(iterated_log_series(0, 1, 3, IteratedLogFormula::Bracket), std::invalid_argument);
}

TEST_CASE("closed-form expansion of products and sums matches the engine") {
  const Element a = x_(P("r")) * log_(2) * gen(2, P("s")) * Q(1, 3) + log_(P("r")) - Element(PP("s"));
  CHECK(closed_form_expand(a, 4) == exp_apply(dx_spec(), a, 4));
  CHECK_THROWS_AS(closed_form_expand(gen(-1), 2), UnsupportedClosedForm);
}
