#pragma once

#include "fcalc/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fcalc {

/// Multi-degree over named parameters, sorted by name, no zero powers.
using ParamDegree = std::vector<std::pair<std::string, std::uint32_t>>;

/// Exact polynomial in the symbolic exponent parameters (r, s, ...) with
/// rational coefficients. This is the coefficient ring of every Element.
class ParamPoly {
public:
  using TermMap = std::map<ParamDegree, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants convert implicitly
  ParamPoly(long c);             // NOLINT

  static ParamPoly param(const std::string& name);
  static ParamPoly term(ParamDegree degree, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty multi-degree.
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  std::set<std::string> parameters() const;

  ParamPoly substitute(const std::string& name, const Rational& value) const;
  ParamPoly pow(unsigned n) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.terms_ == b.terms_;
  }

private:
  void add_term(const ParamDegree& d, const Rational& c);

  TermMap terms_;
};

ParamDegree multiply_degrees(const ParamDegree& a, const ParamDegree& b);

}  // namespace fcalc
