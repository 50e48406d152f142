#include "fcalc/closed_form.hpp"

#include "fcalc/combinatorics.hpp"
#include "fcalc/format.hpp"

#include <functional>

namespace fcalc {

namespace {

constexpr int kX = 0;
constexpr int kLog = 1;

Element x_power(const Exponent& e) { return Element::generator(kX, e); }

// sum_{i=1}^{order} (-1)^{i-1}/i x^{-i} y^i
YSeries log_one_plus(unsigned order) {
  std::vector<Element> c(order + 1);
  for (unsigned i = 1; i <= order; ++i) {
    Rational v(i % 2 ? 1 : -1, static_cast<long>(i));
    c[i] = Element::generator(kX, Exponent(-static_cast<long>(i))) * ParamPoly(v);
  }
  return YSeries(std::move(c));
}

// Calls visit(j) for every vector j of length `len` with entries in [0, bound].
void for_each_tuple(std::size_t len, unsigned bound,
                    const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> j(len, 0);
  while (true) {
    visit(j);
    std::size_t pos = 0;
    while (pos < len && j[pos] == bound) j[pos++] = 0;
    if (pos == len) return;
    ++j[pos];
  }
}

Rational sign(unsigned e) { return e % 2 ? Rational(-1) : Rational(1); }

YSeries bracket_form(int n, const Exponent& r, unsigned order) {
  std::vector<Element> out(order + 1);
  const auto len = static_cast<std::size_t>(n) + 1;
  for_each_tuple(len, order, [&](const std::vector<unsigned>& j) {
    Integer weight = 1;
    for (int i = 0; i < n && weight != 0; ++i) weight *= bracket(j[i], j[i + 1]);
    if (weight == 0) return;
    const unsigned jn = j[n];
    Rational scalar = Rational(weight) * sign(j[0] + jn) * Rational(factorial(jn)) /
                      Rational(factorial(j[0]));
    Monomial m = Monomial::generator(n, r);
    for (int i = 0; i <= n; ++i)
      m = m * Monomial::generator(i, Exponent(-static_cast<long>(j[i])));
    out[j[0]].add_term(m, binom(r, jn) * ParamPoly(scalar));
  });
  return YSeries(std::move(out));
}

YSeries s_recursion_form(int n, const Exponent& r, unsigned order) {
  std::vector<Element> out(order + 1);
  // The chain sum starts at j_n >= 1, so the y^0 term l_n^r is added separately.
  out[0] = Element::generator(n, r);
  for (unsigned k = 1; k <= order; ++k) {
    // tuple holds (j_n, ..., j_1, j_0) with j_0 = k and non-decreasing entries.
    std::vector<int> tuple(static_cast<std::size_t>(n) + 1, 1);
    tuple.back() = static_cast<int>(k);
    while (true) {
      const auto jn = static_cast<unsigned>(tuple.front());
      const Integer s = big_s(tuple);
      if (s != 0) {
        Rational scalar = Rational(s) * sign(k + jn) * Rational(factorial(jn)) / Rational(factorial(k));
        Monomial m = Monomial::generator(n, r - Exponent(static_cast<long>(jn)));
        for (int i = 0; i < n; ++i)
          m = m * Monomial::generator(i, Exponent(-static_cast<long>(tuple[n - i])));
        out[k].add_term(m, binom(r, jn) * ParamPoly(scalar));
      }
      int pos = 0;
      while (pos < n && tuple[pos] == tuple[pos + 1]) ++pos;
      if (pos >= n) break;
      ++tuple[pos];
      for (int i = 0; i < pos; ++i) tuple[i] = 1;
    }
  }
  return YSeries(std::move(out));
}

YSeries paren_form(int n, const Exponent& r, unsigned order) {
  std::vector<Element> out(order + 1);
  const auto len = static_cast<std::size_t>(n) + 1;
  for_each_tuple(len, order, [&](const std::vector<unsigned>& j) {
    unsigned k = 0;
    for (unsigned v : j) k += v;
    if (k > order) return;
    std::vector<unsigned> alpha(len + 1, 0);  // alpha[i] = j_i + ... + j_n
    for (int i = n; i >= 0; --i) alpha[i] = alpha[i + 1] + j[i];
    Integer weight = 1;
    for (int i = 0; i < n && weight != 0; ++i) weight *= paren(j[i], alpha[i + 1]);
    if (weight == 0) return;
    const unsigned jn = j[n];
    Rational scalar = Rational(weight) * Rational(factorial(jn)) / Rational(factorial(k));
    Monomial m = Monomial::generator(n, r);
    for (int i = 0; i <= n; ++i)
      m = m * Monomial::generator(i, Exponent(-static_cast<long>(alpha[i])));
    out[k].add_term(m, binom(r, jn) * ParamPoly(scalar));
  });
  return YSeries(std::move(out));
}

}  // namespace

YSeries binomial_series(const Exponent& e, unsigned order) {
  std::vector<Element> c(order + 1);
  for (unsigned n = 0; n <= order; ++n)
    c[n] = x_power(e - Exponent(static_cast<long>(n))) * binom(e, n);
  return YSeries(std::move(c));
}

YSeries log_series(unsigned order) {
  YSeries tail = log_one_plus(order);
  return constant_series(Element::generator(kLog), order) + tail;
}

YSeries log_power_series(const Exponent& r, unsigned order) {
  // The inner series has y-valuation 1, so its k-th power starts at y^k.
  const YSeries inner = log_one_plus(order);
  YSeries power = constant_series(Element(1L), order);
  YSeries out(order);
  for (unsigned k = 0; k <= order; ++k) {
    const Element outer = Element::generator(kLog, r - Exponent(static_cast<long>(k))) * binom(r, k);
    out = out + power * outer;
    power = power * inner;
  }
  return out;
}

YSeries iterated_log_series(int n, const Exponent& r, unsigned order, IteratedLogFormula formula) {
  if (n < 1) throw std::invalid_argument("iterated_log_series needs n >= 1");
  switch (formula) {
    case IteratedLogFormula::Bracket: return bracket_form(n, r, order);
    case IteratedLogFormula::SRecursion: return s_recursion_form(n, r, order);
    case IteratedLogFormula::Paren: return paren_form(n, r, order);
  }
  throw std::invalid_argument("unknown formula");
}

YSeries closed_form_expand(const Element& a, unsigned order) {
  YSeries total(order);
  for (const auto& [m, c] : a.terms()) {
    YSeries term = constant_series(Element(c), order);
    for (const auto& [g, e] : m.factors()) {
      if (g < 0)
        throw UnsupportedClosedForm("no closed-form expansion for " + generator_name(g));
      const YSeries factor = g == kX    ? binomial_series(e, order)
                             : g == kLog ? log_power_series(e, order)
                                         : iterated_log_series(g, e, order, IteratedLogFormula::Bracket);
      term = term * factor;
    }
    total = total + term;
  }
  return total;
}

}  // namespace fcalc
