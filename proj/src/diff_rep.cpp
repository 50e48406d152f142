#include "fcalc/diff_rep.hpp"

#include "fcalc/derivation.hpp"
#include "fcalc/format.hpp"
#include "fcalc/sampling.hpp"

namespace fcalc {

namespace {

bool intertwines_on(const Element& a, VerifyReport& report) {
  static const DerivationSpec dx = dx_spec();
  static const DerivationSpec xdx = xdx_spec();
  const SubstMap phi = shift_map(1);
  const SubstMap phi_inv = phi.inverse();

  ++report.cases;
  if (!(phi(apply_derivation(dx, a)) == apply_derivation(xdx, phi(a)))) {
    report.fail("phi o d/dx != l_0 d/dx o phi on " + to_text(a));
    return false;
  }
  ++report.cases;
  if (!(phi_inv(apply_derivation(xdx, a)) == apply_derivation(dx, phi_inv(a)))) {
    report.fail("phi^-1 o l_0 d/dx != d/dx o phi^-1 on " + to_text(a));
    return false;
  }
  return true;
}

}  // namespace

VerifyReport verify_intertwine(unsigned max_index, unsigned random_products, std::uint64_t seed) {
  VerifyReport report;
  const int bound = static_cast<int>(max_index);
  for (int n = -bound; n <= bound; ++n)
    if (!intertwines_on(Element::generator(n), report)) return report;

  std::mt19937_64 rng(seed);
  ElementShape shape;
  shape.max_index = bound;
  shape.max_factors = 3;
  shape.params = {"r", "s"};
  for (unsigned i = 0; i < random_products; ++i)
    if (!intertwines_on(random_element(rng, shape), report)) return report;
  return report;
}

YSeries lift_exp(const Element& a, unsigned order) {
  const SubstMap phi = shift_map(1);
  return phi(exp_apply(dx_spec(), phi.inverse()(a), order));
}

}  // namespace fcalc
