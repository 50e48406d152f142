#include "fcalc/sampling.hpp"

namespace fcalc {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, long max_abs, long max_den) {
  long num = 0;
  while (num == 0) num = uniform(rng, -max_abs, max_abs);
  Rational q(num, uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

Exponent random_exponent(std::mt19937_64& rng, const ElementShape& shape) {
  Exponent e(uniform(rng, -shape.max_int_exponent, shape.max_int_exponent));
  if (!shape.params.empty() && uniform(rng, 0, 2) == 0) {
    const auto& name = shape.params[uniform(rng, 0, static_cast<long>(shape.params.size()) - 1)];
    e += Exponent::param(name, uniform(rng, 0, 1) ? 1 : -1);
  }
  if (e.is_zero()) e = Exponent(1);
  return e;
}

Element random_element(std::mt19937_64& rng, const ElementShape& shape) {
  Element out;
  const long terms = uniform(rng, 1, shape.max_terms);
  for (long t = 0; t < terms; ++t) {
    Monomial m;
    const long factors = uniform(rng, 1, shape.max_factors);
    for (long f = 0; f < factors; ++f) {
      const int g = static_cast<int>(uniform(rng, -shape.max_index, shape.max_index));
      m = m * Monomial::generator(g, random_exponent(rng, shape));
    }
    ParamPoly c(random_rational(rng));
    if (!shape.params.empty() && uniform(rng, 0, 3) == 0) c = c * ParamPoly::param(shape.params.front());
    out.add_term(m, c);
  }
  if (out.is_zero()) return Element::generator(0);
  return out;
}

UPoly random_upoly(std::mt19937_64& rng, unsigned max_degree) {
  const long degree = uniform(rng, 0, max_degree);
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng, 4, 2);
  if (sgn(c.back()) == 0) c.back() = Rational(1);
  return UPoly(std::move(c));
}

}  // namespace fcalc
