#include "fcalc/faa_di_bruno.hpp"
#include "support.hpp"

#include <functional>

using namespace fcalc;

namespace {

FdbElement y(unsigned i, unsigned e = 1) { return FdbElement::var(FdbVar::y(i), e); }
FdbElement xv(unsigned j, unsigned e = 1) { return FdbElement::var(FdbVar::x(j), e); }

// Explicit formula: D^n y_0 = sum over partitions n = sum i m_i of
// n! / prod(m_i! i!^m_i) * y_k * prod x_i^m_i, where k = sum m_i.
FdbElement partition_oracle(unsigned n, std::size_t* partitions) {
  FdbElement out;
  std::vector<unsigned> m(n + 1, 0);
  std::size_t count = 0;
  std::function<void(unsigned, unsigned)> walk = [&](unsigned part, unsigned rest) {
    if (rest == 0) {
      ++count;
      Integer denom = 1;
      unsigned k = 0;
      FdbElement mono(1L);
      for (unsigned i = 1; i <= n; ++i) {
        if (m[i] == 0) continue;
        k += m[i];
        Integer fi = factorial(i);
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), fi.get_mpz_t(), m[i]);
        denom *= factorial(m[i]) * p;
        mono = mono * xv(i, m[i]);
      }
      out = out + y(k) * mono * Rational(Integer(factorial(n) / denom));
      return;
    }
    if (part == 0) return;
    for (unsigned c = 0; c * part <= rest; ++c) {
      m[part] = c;
      walk(part - 1, rest - c * part);
    }
    m[part] = 0;
  };
  walk(n, n);
  if (partitions) *partitions = count;
  return out;
}

UPoly X(unsigned k) { return UPoly::monomial(k); }

}  // namespace

TEST_CASE("D on low powers") {
  CHECK(fdb_D(y(0)) == y(1) * xv(1));
  CHECK(fdb_D(xv(2)) == xv(3));
  CHECK(fdb_D_power_y0(2) == y(2) * xv(1, 2) + y(1) * xv(2));
  CHECK(fdb_D_power_y0(3) == y(3) * xv(1, 3) + y(2) * xv(1) * xv(2) * Rational(3) + y(1) * xv(3));
  CHECK_THROWS_AS(FdbElement::var(FdbVar::x(0)), std::invalid_argument);
}

TEST_CASE("D^n y_0 matches the partition formula") {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  const Integer bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (unsigned n = 0; n <= 8; ++n) {
    std::size_t count = 0;
    const FdbElement d = fdb_D_power_y0(n);
    CHECK(d == partition_oracle(n, &count));
    CHECK(count == p[n]);
    CHECK(d.size() == p[n]);
    Rational total = 0;
    for (const auto& [mono, c] : d.terms()) total += c;
    CHECK(total == Rational(bell[n]));
  }
}

TEST_CASE("exp(zD) y_0 coefficients") {
  const auto c = exp_zD_y0(4);
  REQUIRE(c.size() == 5);
  CHECK(c[0] == y(0));
  for (unsigned n = 1; n <= 4; ++n) CHECK(c[n] == fdb_D_power_y0(n) * Rational(1, factorial(n)));
}

TEST_CASE("D is a derivation") {
  const FdbElement a = y(1) * xv(2) + y(0, 2) * Rational(3);
  const FdbElement b = xv(1, 3) - y(2);
  CHECK(fdb_D(a * b) == fdb_D(a) * b + a * fdb_D(b));
}

TEST_CASE("composition through both routes") {
  // f(z) = z^2, g(x) = x^2: f(g(x+y)) = (x+y)^4, y^1 coefficient 4x^3.
  const ComposeResult r = compose_oracle(X(2), X(2), 4);
  CHECK(r.agree);
  CHECK(!r.first_mismatch);
  CHECK(r.direct[1] == X(3) * Rational(4));
  CHECK(r.direct[4] == UPoly::monomial(0, 1));
  // f(z) = z just translates g.
  const UPoly g = X(3) + X(1) * Rational(2);
  const ComposeResult id = compose_oracle(X(1), g, 3);
  CHECK(id.agree);
  CHECK(id.via_faa_di_bruno[1] == X(2) * Rational(3) + UPoly::monomial(0, 2));
  const VerifyReport v = verify_faa_di_bruno(20, 5, 6, 3);
  CHECK_MESSAGE(v.passed, v.failure);
}

TEST_CASE("phi_B") {
  const BSequence b({Rational(2), Rational(5)});
  CHECK(phi_B(b, y(3) * xv(1, 2)) == X(2) * Rational(4));
  CHECK(phi_B(b, y(1) * xv(2) + y(0)) == X(1) * Rational(5) + UPoly::monomial(0, 1));
  CHECK_THROWS_AS(phi_B(b, xv(3)), std::out_of_range);
  CHECK_THROWS_AS(b.at(3), std::out_of_range);
  CHECK_THROWS_AS(b.at(0), std::out_of_range);
  CHECK(b.padded(4).at(4) == 0);
  CHECK_THROWS_AS(BSequence({Rational(0), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(BSequence({}), std::invalid_argument);
}

TEST_CASE("umbral shifts") {
  const UmbralTable plain = umbral_solve(BSequence({Rational(1), Rational(0)}), 3);
  for (unsigned k = 0; k < 3; ++k) CHECK(plain.images[k] == X(k + 1));
  const UmbralTable ones = umbral_solve(BSequence({Rational(1), Rational(1)}), 3);
  CHECK(ones.images[0] == X(1));
  CHECK(ones.images[1] == X(2) + X(1));
  CHECK(ones.images[2] == X(3) + X(2) * Rational(2) - X(1));
  CHECK_THROWS_AS(umbral_solve(BSequence({Rational(1)}), 0), std::invalid_argument);
}

TEST_CASE("umbral shifts satisfy the defining identity for assorted B") {
  const Rational firsts[] = {Rational(1), Rational(2), Rational(-1), Rational(1, 2)};
  for (const Rational& b1 : firsts) {
    const BSequence b({b1, Rational(3), Rational(-2, 3), Rational(1, 5)});
    const unsigned depth = 6;
    const UmbralTable t = umbral_solve(b, depth);
    CHECK(t == umbral_solve(b, depth));
    const BSequence padded = b.padded(depth);
    UPoly p = UPoly::monomial(0, 1);
    for (unsigned m = 1; m <= depth; ++m) {
      p = t.apply(p);
      CHECK(p == phi_B(padded, fdb_D_power_y0(m)));
      CHECK(p.degree() == static_cast<int>(m));
    }
    for (unsigned k = 0; k < depth; ++k) {
      CHECK(t.images[k].degree() == static_cast<int>(k + 1));
      CHECK(t.images[k].leading() == b1);
    }
  }
}
