#include "fcalc/exponent.hpp"

#include <algorithm>

namespace fcalc {

namespace {

Exponent::Linear merge(const Exponent::Linear& a, const Exponent::Linear& b, std::int64_t sign) {
  Exponent::Linear out;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign * j->second);
      ++j;
    } else {
      std::int64_t m = i->second + sign * j->second;
      if (m != 0) out.emplace_back(i->first, m);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Exponent Exponent::param(const std::string& name, std::int64_t coefficient) {
  Exponent e;
  if (coefficient != 0) e.linear_.emplace_back(name, coefficient);
  return e;
}

std::optional<Exponent> Exponent::from_poly(const ParamPoly& p) {
  Exponent e;
  for (const auto& [degree, c] : p.terms()) {
    if (degree.empty()) {
      e.constant_ = c;
    } else if (degree.size() == 1 && degree.front().second == 1 && is_integer(c) &&
               c.get_num().fits_slong_p()) {
      e.linear_.emplace_back(degree.front().first, c.get_num().get_si());
    } else {
      return std::nullopt;
    }
  }
  std::sort(e.linear_.begin(), e.linear_.end());
  return e;
}

std::optional<long> Exponent::as_integer() const {
  if (!linear_.empty() || !is_integer(constant_) || !constant_.get_num().fits_slong_p())
    return std::nullopt;
  return constant_.get_num().get_si();
}

ParamPoly Exponent::to_poly() const {
  ParamPoly p(constant_);
  for (const auto& [name, m] : linear_) p += ParamPoly::param(name) * Rational(m);
  return p;
}

Exponent Exponent::substitute(const std::string& name, const Rational& value) const {
  Exponent out;
  out.constant_ = constant_;
  for (const auto& [n, m] : linear_) {
    if (n == name) {
      out.constant_ += value * Rational(m);
    } else {
      out.linear_.emplace_back(n, m);
    }
  }
  return out;
}

std::optional<Exponent> Exponent::scaled(const Rational& q) const {
  Exponent out;
  out.constant_ = constant_ * q;
  if (sgn(q) == 0) return out;
  for (const auto& [n, m] : linear_) {
    Rational v = q * Rational(m);
    if (!is_integer(v) || !v.get_num().fits_slong_p()) return std::nullopt;
    out.linear_.emplace_back(n, v.get_num().get_si());
  }
  return out;
}

std::optional<Exponent> Exponent::times(const Exponent& o) const {
  if (o.is_constant()) return scaled(o.constant_);
  if (is_constant()) return o.scaled(constant_);
  return std::nullopt;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  constant_ += o.constant_;
  linear_ = merge(linear_, o.linear_, 1);
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
  constant_ -= o.constant_;
  linear_ = merge(linear_, o.linear_, -1);
  return *this;
}

Exponent Exponent::operator-() const {
  Exponent out;
  out.constant_ = -constant_;
  out.linear_ = linear_;
  for (auto& [n, m] : out.linear_) m = -m;
  return out;
}

std::strong_ordering compare(const Exponent& a, const Exponent& b) {
  int c = cmp(a.constant_, b.constant_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.linear_ <=> b.linear_;
}

ParamPoly binom(const Exponent& e, unsigned n) {
  ParamPoly base = e.to_poly();
  ParamPoly out(1L);
  for (unsigned i = 0; i < n; ++i) {
    out = out * (base - ParamPoly(static_cast<long>(i)));
    if (out.is_zero()) return out;
  }
  out *= Rational(1) / Rational(factorial(n));
  return out;
}

}  // namespace fcalc
