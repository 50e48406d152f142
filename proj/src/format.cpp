#include "fcalc/format.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <vector>

namespace fcalc {

namespace {

// A signed product: `negative` plus an optional rational magnitude and
// symbolic factors. Printing elides a unit magnitude when factors exist.
struct Product {
  bool negative = false;
  std::string magnitude;  // empty when 1
  std::vector<std::string> factors;
};

std::string join_sum(const std::vector<Product>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    std::string body;
    if (!t.magnitude.empty()) body = t.magnitude;
    for (const auto& f : t.factors) {
      if (!body.empty()) body += latex ? " " : "*";
      body += f;
    }
    if (body.empty()) body = "1";
    if (first) {
      out = (t.negative ? "-" : "") + body;
      first = false;
    } else {
      out += (t.negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string latex_rational(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

// Sets sign and magnitude from a rational coefficient.
void set_scalar(Product& p, const Rational& c, bool latex) {
  p.negative = sgn(c) < 0;
  const Rational a = abs(c);
  if (a != 1) p.magnitude = latex ? latex_rational(a) : a.get_str();
}

std::vector<std::pair<const ParamDegree*, const Rational*>> print_order(const ParamPoly& p) {
  std::vector<std::pair<const ParamDegree*, const Rational*>> terms;
  for (const auto& [d, c] : p.terms()) terms.emplace_back(&d, &c);
  std::reverse(terms.begin(), terms.end());
  auto total = [](const ParamDegree* d) {
    unsigned t = 0;
    for (const auto& kv : *d) t += kv.second;
    return t;
  };
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return total(a.first) > total(b.first); });
  return terms;
}

std::vector<Product> param_products(const ParamPoly& p, bool latex) {
  std::vector<Product> out;
  for (const auto& [d, c] : print_order(p)) {
    Product t;
    set_scalar(t, *c, latex);
    for (const auto& [name, power] : *d) {
      if (power == 1) {
        t.factors.push_back(name);
      } else {
        t.factors.push_back(name + "^" + (latex ? "{" + std::to_string(power) + "}" : std::to_string(power)));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Product> exponent_products(const Exponent& e, bool latex) {
  std::vector<Product> out;
  for (const auto& [name, m] : e.linear()) {
    Product t;
    set_scalar(t, Rational(m), latex);
    t.factors.push_back(name);
    out.push_back(std::move(t));
  }
  if (sgn(e.constant()) != 0 || out.empty()) {
    Product t;
    set_scalar(t, e.constant(), latex);
    if (t.magnitude.empty()) t.magnitude = "1";
    if (sgn(e.constant()) == 0) t.magnitude = "0";
    out.push_back(std::move(t));
  }
  return out;
}

std::string generator_latex(int index) {
  switch (index) {
    case 0: return "x";
    case 1: return "\\log x";
    case -1: return "e^{x}";
    default: return "\\ell_{" + std::to_string(index) + "}(x)";
  }
}

std::string factor_text(int g, const Exponent& e) {
  const std::string name = generator_name(g);
  if (e == Exponent(1)) return name;
  const std::string exp = to_text(e);
  if (std::all_of(exp.begin(), exp.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); }))
    return name + "^" + exp;
  return name + "^(" + exp + ")";
}

std::string factor_latex(int g, const Exponent& e) {
  std::string name = generator_latex(g);
  if (e == Exponent(1)) return name;
  if (g != 0) name = "(" + name + ")";
  return name + "^{" + to_latex(e) + "}";
}

// Terms of an Element as products: a single-term ParamPoly coefficient
// merges into the product; a longer one becomes a parenthesized factor.
std::vector<Product> element_products(const Element& a, bool latex) {
  std::vector<Product> out;
  for (const auto& [m, c] : a.terms()) {
    Product t;
    if (c.size() == 1) {
      t = param_products(c, latex).front();
    } else {
      const std::string inner = latex ? to_latex(c) : to_text(c);
      if (m.is_one() && a.size() == 1) {
        t.factors.push_back(inner);
      } else {
        t.factors.push_back(latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")");
      }
    }
    for (const auto& [g, e] : m.factors()) t.factors.push_back(latex ? factor_latex(g, e) : factor_text(g, e));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Product> series_products(const YSeries& s, const std::string& var, bool latex) {
  std::vector<Product> out;
  for (unsigned k = 0; k <= s.order(); ++k) {
    const Element& c = s.coeff(k);
    if (c.is_zero()) continue;
    std::string ypow;
    if (k == 1) ypow = var;
    if (k > 1) ypow = var + "^" + (latex ? "{" + std::to_string(k) + "}" : std::to_string(k));
    const bool bare_scalar = c.size() == 1 && c.terms().begin()->first.is_one() &&
                             c.terms().begin()->second.size() > 1;
    if (k == 0 || (c.size() == 1 && !bare_scalar)) {
      auto terms = element_products(c, latex);
      if (k == 0) {
        out.insert(out.end(), terms.begin(), terms.end());
        continue;
      }
      Product t = terms.front();
      t.factors.push_back(ypow);
      out.push_back(std::move(t));
    } else {
      Product t;
      const std::string inner = latex ? to_latex(c) : to_text(c);
      t.factors.push_back(latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")");
      t.factors.push_back(ypow);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Product> upoly_products(const UPoly& p, bool latex) {
  std::vector<Product> out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Product t;
    set_scalar(t, c, latex);
    if (i == 1) t.factors.push_back("x");
    if (i > 1) t.factors.push_back("x^" + (latex ? "{" + std::to_string(i) + "}" : std::to_string(i)));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Product> fdb_products(const FdbElement& a, bool latex) {
  std::vector<Product> out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    Product t;
    set_scalar(t, it->second, latex);
    for (const auto& [v, e] : it->first) {
      const char letter = v.kind == FdbVar::Kind::Y ? 'y' : 'x';
      std::string f = latex ? std::string(1, letter) + "_{" + std::to_string(v.index) + "}"
                            : std::string(1, letter) + "_" + std::to_string(v.index);
      if (e > 1) f += "^" + (latex ? "{" + std::to_string(e) + "}" : std::to_string(e));
      t.factors.push_back(std::move(f));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::string generator_name(int index) {
  switch (index) {
    case 0: return "x";
    case 1: return "log(x)";
    case -1: return "exp(x)";
    default: return "l_" + std::to_string(index) + "(x)";
  }
}

std::string to_text(const ParamPoly& p) { return join_sum(param_products(p, false), false); }
std::string to_text(const Exponent& e) { return join_sum(exponent_products(e, false), false); }

std::string to_text(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [g, e] : m.factors()) out += (out.empty() ? "" : "*") + factor_text(g, e);
  return out;
}

std::string to_text(const Element& a) { return join_sum(element_products(a, false), false); }
std::string to_text(const YSeries& s, const std::string& var) {
  return join_sum(series_products(s, var, false), false);
}
std::string to_text(const UPoly& p) { return join_sum(upoly_products(p, false), false); }
std::string to_text(const FdbElement& a) { return join_sum(fdb_products(a, false), false); }

std::string to_latex(const ParamPoly& p) { return join_sum(param_products(p, true), true); }
std::string to_latex(const Exponent& e) { return join_sum(exponent_products(e, true), true); }
std::string to_latex(const Element& a) { return join_sum(element_products(a, true), true); }
std::string to_latex(const YSeries& s, const std::string& var) {
  return join_sum(series_products(s, var, true), true);
}
std::string to_latex(const UPoly& p) { return join_sum(upoly_products(p, true), true); }
std::string to_latex(const FdbElement& a) { return join_sum(fdb_products(a, true), true); }

}  // namespace fcalc
