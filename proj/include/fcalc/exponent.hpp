#pragma once

#include "fcalc/param_poly.hpp"
#include "fcalc/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fcalc {

/// Affine exponent q + sum_i m_i * r_i with q rational and integer m_i.
/// Closed under addition, negation and integer scaling, which is all the
/// power rule and the exponent law need.
class Exponent {
public:
  using Linear = std::vector<std::pair<std::string, std::int64_t>>;

  Exponent() = default;
  Exponent(const Rational& c) : constant_(c) {}  // NOLINT
  Exponent(long c) : constant_(c) {}             // NOLINT

  static Exponent param(const std::string& name, std::int64_t coefficient = 1);
  /// Builds from an affine ParamPoly; nullopt if the polynomial is not
  /// affine or a parameter coefficient is not an integer.
  static std::optional<Exponent> from_poly(const ParamPoly& p);

  const Rational& constant() const { return constant_; }
  const Linear& linear() const { return linear_; }

  bool is_zero() const { return linear_.empty() && sgn(constant_) == 0; }
  bool is_constant() const { return linear_.empty(); }
  /// Value when this is a plain integer exponent.
  std::optional<long> as_integer() const;

  ParamPoly to_poly() const;
  Exponent substitute(const std::string& name, const Rational& value) const;
  /// Multiplication by a rational; nullopt when a parameter coefficient
  /// would stop being integral.
  std::optional<Exponent> scaled(const Rational& q) const;
  /// Product with another exponent when one of them is constant.
  std::optional<Exponent> times(const Exponent& o) const;

  Exponent& operator+=(const Exponent& o);
  Exponent& operator-=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  Exponent operator-() const;

  /// Orders by constant, then lexicographically by linear part.
  friend std::strong_ordering compare(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.constant_ == b.constant_ && a.linear_ == b.linear_;
  }
  friend bool operator<(const Exponent& a, const Exponent& b) { return compare(a, b) < 0; }

private:
  Rational constant_;
  Linear linear_;
};

/// Algebraic binomial coefficient prod_{i<n} (e - i) / n!.
ParamPoly binom(const Exponent& e, unsigned n);

}  // namespace fcalc
