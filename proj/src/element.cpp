#include "fcalc/element.hpp"

#include <algorithm>

namespace fcalc {

// Monomial

Monomial Monomial::generator(int index, const Exponent& e) {
  Monomial m;
  if (!e.is_zero()) m.factors_.emplace_back(index, e);
  return m;
}

Exponent Monomial::exponent_of(int index) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                             [](const auto& f, int i) { return f.first < i; });
  if (it != factors_.end() && it->first == index) return it->second;
  return Exponent();
}

std::set<int> Monomial::generators() const {
  std::set<int> out;
  for (const auto& f : factors_) out.insert(f.first);
  return out;
}

Monomial Monomial::with_exponent(int index, const Exponent& e) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && f.first >= index) {
      if (!e.is_zero()) out.factors_.emplace_back(index, e);
      placed = true;
      if (f.first == index) continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && !e.is_zero()) out.factors_.emplace_back(index, e);
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::shifted(int k) const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.first += k;
  return out;
}

Monomial Monomial::substitute(const std::string& name, const Rational& value) const {
  Monomial out;
  for (const auto& [g, e] : factors_) {
    Exponent s = e.substitute(name, value);
    if (!s.is_zero()) out.factors_.emplace_back(g, std::move(s));
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      f.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      f.push_back(*j++);
    } else {
      Exponent e = i->second + j->second;
      if (!e.is_zero()) f.emplace_back(i->first, std::move(e));
      ++i;
      ++j;
    }
  }
  return out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  const auto& x = a.factors_;
  const auto& y = b.factors_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].first != y[i].first) return x[i].first <=> y[i].first;
    if (auto c = compare(x[i].second, y[i].second); c != 0) return c;
  }
  return x.size() <=> y.size();
}

// Element

Element::Element(const ParamPoly& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Element Element::term(const ParamPoly& c, const Monomial& m) {
  Element out;
  out.add_term(m, c);
  return out;
}

Element Element::generator(int index, const Exponent& e) {
  return term(ParamPoly(1L), Monomial::generator(index, e));
}

std::set<int> Element::generators() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

std::set<std::string> Element::parameters() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    auto p = c.parameters();
    out.insert(p.begin(), p.end());
    for (const auto& f : m.factors())
      for (const auto& [name, coeff] : f.second.linear()) out.insert(name);
  }
  return out;
}

ParamPoly Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void Element::add_term(const Monomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::substitute_param(const std::string& name, const Rational& value) const {
  Element out;
  for (const auto& [m, c] : terms_) out.add_term(m.substitute(name, value), c.substitute(name, value));
  return out;
}

Element Element::shifted(int k) const {
  Element out;
  for (const auto& [m, c] : terms_) out.add_term(m.shifted(k), c);
  return out;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap next;
  for (auto& [m, v] : terms_) {
    ParamPoly p = v * c;
    if (!p.is_zero()) next.emplace(m, std::move(p));
  }
  terms_ = std::move(next);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Element pow(const Element& a, unsigned n) {
  Element out(1L);
  for (unsigned i = 0; i < n; ++i) out = out * a;
  return out;
}

std::optional<Element> invert(const Element& a) {
  if (a.size() != 1) return std::nullopt;
  const auto& [m, c] = *a.terms().begin();
  if (!c.is_constant()) return std::nullopt;
  return Element::term(ParamPoly(Rational(1) / c.constant_term()), m.inverse());
}

}  // namespace fcalc
