#pragma once

#include "fcalc/rational.hpp"

#include <initializer_list>
#include <vector>

namespace fcalc {

/// Dense univariate polynomial in x over the rationals; coefficient of x^i
/// at index i, no trailing zeros (the zero polynomial is empty).
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly monomial(unsigned degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  UPoly derivative() const;
  /// this(inner(x)).
  UPoly compose(const UPoly& inner) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace fcalc
