#include "fcalc/derivation.hpp"

#include "fcalc/format.hpp"
#include "fcalc/sampling.hpp"

#include <deque>
#include <set>

namespace fcalc {

DerivationSpec::DerivationSpec(std::string name, std::map<int, Element> images)
    : name_(std::move(name)),
      rule_([table = std::move(images)](int g) -> std::optional<Element> {
        auto it = table.find(g);
        if (it == table.end()) return std::nullopt;
        return it->second;
      }) {}

DerivationSpec::DerivationSpec(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

ClosureError::ClosureError(const std::string& derivation, int generator)
    : std::runtime_error("derivation '" + derivation + "' has no image for generator " +
                         generator_name(generator)),
      generator_(generator) {}

DerivationSpec dx_spec() {
  return DerivationSpec("d/dx", [](int n) -> std::optional<Element> {
    if (n == 0) return Element(1L);
    Monomial m;
    if (n < 0) {
      for (int i = -1; i >= n; --i) m = m * Monomial::generator(i);
    } else {
      for (int i = 0; i < n; ++i) m = m * Monomial::generator(i, Exponent(-1));
    }
    return Element::term(ParamPoly(1L), m);
  });
}

DerivationSpec xdx_spec() {
  DerivationSpec base = dx_spec();
  const Element x = Element::generator(0);
  return DerivationSpec("l_0(x) d/dx", [base, x](int n) -> std::optional<Element> {
    auto img = base.image(n);
    if (!img) return std::nullopt;
    return x * *img;
  });
}

void check_closure(const DerivationSpec& d, const Element& a) {
  std::set<int> seen;
  std::deque<int> pending;
  for (int g : a.generators())
    if (seen.insert(g).second) pending.push_back(g);
  while (!pending.empty()) {
    const int g = pending.front();
    pending.pop_front();
    auto img = d.image(g);
    if (!img) throw ClosureError(d.name(), g);
    for (int h : img->generators())
      if (seen.insert(h).second) pending.push_back(h);
  }
}

namespace {

class ImageCache {
public:
  explicit ImageCache(const DerivationSpec& d) : d_(d) {}
  const Element& operator()(int g) {
    auto it = images_.find(g);
    if (it != images_.end()) return it->second;
    auto img = d_.image(g);
    if (!img) throw ClosureError(d_.name(), g);
    return images_.emplace(g, std::move(*img)).first->second;
  }

private:
  const DerivationSpec& d_;
  std::map<int, Element> images_;
};

// Power rule on one monomial:  sum_i e_i g_i^{e_i - 1} D(g_i) prod_{j != i} g_j^{e_j}.
void derive_term(ImageCache& images, const Monomial& m, const ParamPoly& c, Element& out) {
  for (const auto& [g, e] : m.factors()) {
    const Element& img = images(g);
    if (img.is_zero()) continue;
    const Monomial lowered = m.with_exponent(g, e - Exponent(1));
    const ParamPoly factor = c * e.to_poly();
    for (const auto& [im, ic] : img.terms()) out.add_term(lowered * im, factor * ic);
  }
}

Element derive(ImageCache& images, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) derive_term(images, m, c, out);
  return out;
}

}  // namespace

Element apply_derivation(const DerivationSpec& d, const Element& a) {
  ImageCache images(d);
  return derive(images, a);
}

YSeries exp_apply(const DerivationSpec& d, const Element& a, unsigned order) {
  check_closure(d, a);
  std::vector<Element> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(a);
  ImageCache images(d);
  Element current = a;
  for (unsigned k = 1; k <= order; ++k) {
    current = derive(images, current);
    coeffs.push_back(current * ParamPoly(Rational(1) / Rational(factorial(k))));
  }
  return YSeries(std::move(coeffs));
}

VerifyReport verify_automorphism(unsigned samples, unsigned order, std::uint64_t seed,
                                 int max_index) {
  VerifyReport report;
  std::mt19937_64 rng(seed);
  ElementShape shape;
  shape.max_index = max_index;
  const DerivationSpec derivations[] = {dx_spec(), xdx_spec()};
  for (unsigned s = 0; s < samples && report.passed; ++s) {
    const Element a = random_element(rng, shape);
    const Element b = random_element(rng, shape);
    for (const auto& d : derivations) {
      ++report.cases;
      const YSeries lhs = exp_apply(d, a * b, order);
      const YSeries rhs = exp_apply(d, a, order) * exp_apply(d, b, order);
      if (!(lhs == rhs)) {
        report.fail(d.name() + ": a = " + to_text(a) + ", b = " + to_text(b));
        break;
      }
    }
  }
  return report;
}

}  // namespace fcalc
