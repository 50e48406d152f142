#pragma once

// The algebra of finite sums  c * prod_n l_n(x)^{e_n}  where l_n is the n-th
// iterated logarithm (n > 0), x itself (n = 0) or the (-n)-th iterated
// exponential (n < 0), the e_n are affine Exponents and c is a ParamPoly.

#include "fcalc/exponent.hpp"
#include "fcalc/param_poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fcalc {

/// Product of generator powers. Factors are sorted by generator index and
/// zero exponents are never stored, so equal monomials compare equal.
class Monomial {
public:
  using Factors = std::vector<std::pair<int, Exponent>>;

  Monomial() = default;
  static Monomial generator(int index, const Exponent& e = Exponent(1));

  const Factors& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Exponent exponent_of(int index) const;
  std::set<int> generators() const;

  /// Replaces the exponent of one generator (removing it when zero).
  Monomial with_exponent(int index, const Exponent& e) const;
  Monomial inverse() const;
  /// l_n -> l_{n+k} on every factor.
  Monomial shifted(int k) const;
  Monomial substitute(const std::string& name, const Rational& value) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend std::strong_ordering compare(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

private:
  Factors factors_;
};

class Element {
public:
  using TermMap = std::map<Monomial, ParamPoly>;

  Element() = default;
  Element(const ParamPoly& c);  // NOLINT: scalars embed as constants
  Element(const Rational& c) : Element(ParamPoly(c)) {}  // NOLINT
  Element(long c) : Element(ParamPoly(c)) {}             // NOLINT

  static Element term(const ParamPoly& c, const Monomial& m);
  static Element generator(int index, const Exponent& e = Exponent(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::set<int> generators() const;
  std::set<std::string> parameters() const;
  /// Coefficient of the given monomial (zero when absent).
  ParamPoly coefficient(const Monomial& m) const;

  Element substitute_param(const std::string& name, const Rational& value) const;
  Element shifted(int k) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const ParamPoly& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, const ParamPoly& c) { return a *= c; }
  friend Element operator*(Element a, const Rational& c) { return a *= ParamPoly(c); }
  friend Element operator*(Element a, long c) { return a *= ParamPoly(c); }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Accumulates c*m into this element; cancels to nothing when it sums to 0.
  void add_term(const Monomial& m, const ParamPoly& c);

private:
  TermMap terms_;
};

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element mul(const Element& a, const Element& b) { return a * b; }

inline Element substitute_param(const Element& a, const std::string& name,
                                const Rational& value) {
  return a.substitute_param(name, value);
}

/// Nonnegative integer power by repeated multiplication.
Element pow(const Element& a, unsigned n);

/// Multiplicative inverse of a single term with a nonzero rational
/// coefficient; nullopt for anything else.
std::optional<Element> invert(const Element& a);

}  // namespace fcalc
