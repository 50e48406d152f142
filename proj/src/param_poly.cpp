#include "fcalc/param_poly.hpp"

#include <algorithm>

namespace fcalc {

ParamDegree multiply_degrees(const ParamDegree& a, const ParamDegree& b) {
  ParamDegree out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

ParamPoly::ParamPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(ParamDegree{}, c);
}

ParamPoly::ParamPoly(long c) : ParamPoly(Rational(c)) {}

ParamPoly ParamPoly::param(const std::string& name) {
  return term(ParamDegree{{name, 1}}, Rational(1));
}

ParamPoly ParamPoly::term(ParamDegree degree, const Rational& c) {
  ParamPoly p;
  std::erase_if(degree, [](const auto& kv) { return kv.second == 0; });
  std::sort(degree.begin(), degree.end());
  p.add_term(degree, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(ParamDegree{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> ParamPoly::parameters() const {
  std::set<std::string> out;
  for (const auto& [d, c] : terms_)
    for (const auto& [name, power] : d) out.insert(name);
  return out;
}

void ParamPoly::add_term(const ParamDegree& d, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::substitute(const std::string& name, const Rational& value) const {
  ParamPoly out;
  for (const auto& [d, c] : terms_) {
    ParamDegree rest;
    Rational factor = c;
    for (const auto& [n, power] : d) {
      if (n == name) {
        Rational v;
        mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), power);
        mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), power);
        factor *= v;
      } else {
        rest.emplace_back(n, power);
      }
    }
    out.add_term(rest, factor);
  }
  return out;
}

ParamPoly ParamPoly::pow(unsigned n) const {
  ParamPoly out(1L);
  ParamPoly base = *this;
  while (n) {
    if (n & 1U) out = out * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [d, v] : terms_) v *= c;
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(multiply_degrees(da, db), ca * cb);
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

}  // namespace fcalc
