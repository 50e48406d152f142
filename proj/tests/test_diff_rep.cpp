#include "fcalc/derivation.hpp"
#include "fcalc/diff_rep.hpp"
#include "fcalc/sampling.hpp"
#include "support.hpp"

#include <random>

using namespace fcalc;

TEST_CASE("subscript shifts") {
  CHECK(shift_map(1)(x_()) == log_());
  CHECK(shift_map(1)(gen(-1, P("r")) * x_()) == x_(P("r")) * log_());
  CHECK(shift_map(-3)(gen(2) * PP("r")) == gen(-1) * PP("r"));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Element a = random_element(rng);
    const Element b = random_element(rng);
    const int k = static_cast<int>(rng() % 7) - 3;
    CHECK(shift_map(-k)(shift_map(k)(a)) == a);
    CHECK(shift_map(k).inverse()(shift_map(k)(a)) == a);
    CHECK(shift_map(k)(a * b) == shift_map(k)(a) * shift_map(k)(b));
  }
}

TEST_CASE("phi intertwines d/dx with l_0 d/dx") {
  const DerivationSpec dx = dx_spec();
  const DerivationSpec xdx = xdx_spec();
  const SubstMap phi = shift_map(1);
  // Smallest case: phi(d/dx l_0) = phi(1) = 1 = l_0 d/dx (l_1).
  CHECK(phi(apply_derivation(dx, x_())) == Element(1L));
  CHECK(apply_derivation(xdx, phi(x_())) == Element(1L));
  for (int n = -6; n <= 6; ++n) {
    CHECK(phi(apply_derivation(dx, gen(n))) == apply_derivation(xdx, phi(gen(n))));
    CHECK(phi.inverse()(apply_derivation(xdx, gen(n))) == apply_derivation(dx, phi.inverse()(gen(n))));
  }
  const VerifyReport r = verify_intertwine(6);
  CHECK_MESSAGE(r.passed, r.failure);
  CHECK(r.cases == 2 * 13 + 2 * 50);
}

TEST_CASE("lifting reproduces x e^y and log x + y") {
  CHECK(lift_exp(x_(), 3) == series({x_(), x_(), x_() * Q(1, 2), x_() * Q(1, 6)}));
  CHECK(lift_exp(log_(), 3) == series({log_(), Element(1L), Element(), Element()}));
  const Element xr = x_(P("r"));
  CHECK(lift_exp(xr, 2) == series({xr, xr * PP("r"), xr * (PP("r") * PP("r") * Q(1, 2))}));
  CHECK(lift_exp(xr, 2) == exp_apply(xdx_spec(), xr, 2));
}

TEST_CASE("lifting theorem on random elements") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const Element a = random_element(rng);
    const unsigned order = static_cast<unsigned>(rng() % 7);
    CHECK(lift_exp(a, order) == exp_apply(xdx_spec(), a, order));
  }
}
