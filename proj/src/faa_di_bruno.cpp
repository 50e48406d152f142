#include "fcalc/faa_di_bruno.hpp"

#include "fcalc/sampling.hpp"

#include <stdexcept>
#include <string>

namespace fcalc {

// FdbElement

FdbMonomial multiply(const FdbMonomial& a, const FdbMonomial& b) {
  FdbMonomial out;
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

FdbElement::FdbElement(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(FdbMonomial{}, c);
}

FdbElement FdbElement::var(FdbVar v, unsigned exponent) {
  if (v.kind == FdbVar::Kind::X && v.index == 0)
    throw std::invalid_argument("x_0 is not part of the alphabet (x_j starts at j = 1)");
  FdbElement out;
  out.add_term(exponent == 0 ? FdbMonomial{} : FdbMonomial{{v, exponent}}, Rational(1));
  return out;
}

void FdbElement::add_term(const FdbMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FdbElement& FdbElement::operator+=(const FdbElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FdbElement& FdbElement::operator-=(const FdbElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FdbElement operator*(const FdbElement& a, const FdbElement& b) {
  FdbElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

FdbElement operator*(FdbElement a, const Rational& c) {
  if (sgn(c) == 0) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

// The derivation

namespace {

FdbMonomial image_of(FdbVar v) {
  if (v.kind == FdbVar::Kind::Y) return {{FdbVar::y(v.index + 1), 1}, {FdbVar::x(1), 1}};
  return {{FdbVar::x(v.index + 1), 1}};
}

}  // namespace

FdbElement fdb_D(const FdbElement& a) {
  FdbElement out;
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto [v, e] = m[i];
      FdbMonomial lowered;
      lowered.reserve(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (j != i) {
          lowered.push_back(m[j]);
        } else if (e > 1) {
          lowered.emplace_back(v, e - 1);
        }
      }
      out.add_term(multiply(lowered, image_of(v)), c * Rational(static_cast<long>(e)));
    }
  }
  return out;
}

FdbElement fdb_D_power_y0(unsigned n) {
  FdbElement cur = FdbElement::var(FdbVar::y(0));
  for (unsigned k = 0; k < n; ++k) cur = fdb_D(cur);
  return cur;
}

std::vector<FdbElement> exp_zD_y0(unsigned order) {
  std::vector<FdbElement> out;
  out.reserve(order + 1);
  FdbElement cur = FdbElement::var(FdbVar::y(0));
  out.push_back(cur);
  for (unsigned n = 1; n <= order; ++n) {
    cur = fdb_D(cur);
    out.push_back(cur * (Rational(1) / Rational(factorial(n))));
  }
  return out;
}

// Composition oracle

namespace {

using Bivariate = std::vector<UPoly>;  // index = power of y

Bivariate truncated_product(const Bivariate& a, const Bivariate& b) {
  Bivariate out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// g(x + y) expanded by the binomial theorem, y-powers 0..order.
Bivariate translate(const UPoly& g, unsigned order) {
  Bivariate out(order + 1);
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    Integer binom_ik = 1;
    for (std::size_t k = 0; k <= i && k <= order; ++k) {
      out[k] += UPoly::monomial(static_cast<unsigned>(i - k), g.coeffs()[i] * Rational(binom_ik));
      binom_ik = binom_ik * Integer(static_cast<unsigned long>(i - k)) / Integer(static_cast<unsigned long>(k + 1));
    }
  }
  return out;
}

}  // namespace

ComposeResult compose_oracle(const UPoly& f, const UPoly& g, unsigned order) {
  ComposeResult result;

  const Bivariate shifted = translate(g, order);
  Bivariate horner(order + 1);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    horner = truncated_product(horner, shifted);
    horner[0] += UPoly(std::vector<Rational>{*it});
  }
  result.direct = std::move(horner);

  std::vector<UPoly> f_at_g{f.compose(g)};
  std::vector<UPoly> g_derivs{g};
  UPoly fd = f;
  for (unsigned n = 1; n <= order; ++n) {
    fd = fd.derivative();
    f_at_g.push_back(fd.compose(g));
    g_derivs.push_back(g_derivs.back().derivative());
  }
  for (const FdbElement& coeff : exp_zD_y0(order)) {
    UPoly total;
    for (const auto& [m, c] : coeff.terms()) {
      UPoly term = UPoly::monomial(0, c);
      for (const auto& [v, e] : m) {
        const UPoly& base = v.kind == FdbVar::Kind::Y ? f_at_g.at(v.index) : g_derivs.at(v.index);
        for (unsigned i = 0; i < e; ++i) term = term * base;
      }
      total += term;
    }
    result.via_faa_di_bruno.push_back(std::move(total));
  }

  for (unsigned k = 0; k <= order; ++k) {
    if (!(result.direct[k] == result.via_faa_di_bruno[k])) {
      result.first_mismatch = k;
      break;
    }
  }
  result.agree = !result.first_mismatch.has_value();
  return result;
}

VerifyReport verify_faa_di_bruno(unsigned samples, unsigned max_degree, unsigned order,
                                 std::uint64_t seed) {
  VerifyReport report;
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const UPoly f = random_upoly(rng, max_degree);
    const UPoly g = random_upoly(rng, max_degree);
    ++report.cases;
    const ComposeResult r = compose_oracle(f, g, order);
    if (!r.agree) {
      report.fail("sample " + std::to_string(s) + ": y^" + std::to_string(*r.first_mismatch) +
                  " coefficients differ");
      break;
    }
  }
  return report;
}

// Umbral shifts

BSequence::BSequence(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("B sequence is empty");
  if (sgn(values_.front()) == 0) throw std::invalid_argument("B_1 must be nonzero");
}

const Rational& BSequence::at(std::size_t i) const {
  if (i == 0 || i > values_.size())
    throw std::out_of_range("B_" + std::to_string(i) + " is outside the sequence B_1..B_" +
                            std::to_string(values_.size()));
  return values_[i - 1];
}

BSequence BSequence::padded(std::size_t length) const {
  std::vector<Rational> v = values_;
  if (v.size() < length) v.resize(length);
  return BSequence(std::move(v));
}

UPoly phi_B(const BSequence& b, const FdbElement& a) {
  UPoly out;
  for (const auto& [m, c] : a.terms()) {
    Rational coeff = c;
    unsigned degree = 0;
    for (const auto& [v, e] : m) {
      if (v.kind == FdbVar::Kind::Y) continue;
      const Rational& bi = b.at(v.index);
      for (unsigned i = 0; i < e; ++i) coeff *= bi;
      degree += e;
    }
    out += UPoly::monomial(degree, coeff);
  }
  return out;
}

UPoly UmbralTable::apply(const UPoly& p) const {
  if (p.degree() >= static_cast<int>(images.size()))
    throw std::out_of_range("D_B is only known on x^k for k < " + std::to_string(images.size()));
  UPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out += images[k] * p.coeffs()[k];
  return out;
}

UmbralTable umbral_solve(const BSequence& b, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("umbral depth must be at least 1");
  UmbralTable table{b.padded(depth), {}};

  std::vector<UPoly> targets;  // phi_B(D^m y_0)
  FdbElement d = FdbElement::var(FdbVar::y(0));
  targets.push_back(phi_B(table.b, d));
  for (unsigned m = 1; m <= depth; ++m) {
    d = fdb_D(d);
    targets.push_back(phi_B(table.b, d));
  }

  for (unsigned m = 1; m <= depth; ++m) {
    const UPoly& prev = targets[m - 1];
    if (prev.degree() != static_cast<int>(m - 1))
      throw std::logic_error("phi_B(D^" + std::to_string(m - 1) + " y_0) has unexpected degree");
    // D_B(prev) = targets[m]; everything but the top power of prev is known.
    UPoly rhs = targets[m];
    for (unsigned k = 0; k + 1 < m; ++k) rhs -= table.images[k] * prev.coeff(k);
    table.images.push_back(rhs * (Rational(1) / prev.leading()));
  }

  UPoly cur = UPoly::monomial(0);
  for (unsigned m = 1; m <= depth; ++m) {
    cur = table.apply(cur);
    if (!(cur == targets[m]))
      throw std::logic_error("umbral shift fails D_B^" + std::to_string(m) + "(1) = phi_B(D^" +
                             std::to_string(m) + " y_0)");
  }
  return table;
}

}  // namespace fcalc
