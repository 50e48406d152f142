#pragma once

#include "fcalc/element.hpp"
#include "fcalc/report.hpp"
#include "fcalc/yseries.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace fcalc {

/// A derivation on the generator algebra, fixed by the image of each
/// generator and extended by the Leibniz and power rules.
///
/// Built-in derivations act on every generator index and are given by a rule;
/// user derivations are a finite table and may leave generators undefined.
class DerivationSpec {
public:
  using Rule = std::function<std::optional<Element>(int)>;

  DerivationSpec(std::string name, std::map<int, Element> images);
  DerivationSpec(std::string name, Rule rule);

  const std::string& name() const { return name_; }
  std::optional<Element> image(int generator) const { return rule_(generator); }

private:
  std::string name_;
  Rule rule_;
};

class ClosureError : public std::runtime_error {
public:
  ClosureError(const std::string& derivation, int generator);
  int generator() const { return generator_; }

private:
  int generator_;
};

/// d/dx:  l_0 -> 1,  l_{-n} -> l_{-1}...l_{-n},  l_n -> (l_0...l_{n-1})^{-1}.
DerivationSpec dx_spec();
/// l_0(x) d/dx.
DerivationSpec xdx_spec();

/// Throws ClosureError naming the first generator reachable from `a` (by
/// repeatedly taking images) that has no image.
void check_closure(const DerivationSpec& d, const Element& a);

Element apply_derivation(const DerivationSpec& d, const Element& a);

/// e^{yD} a truncated after y^order: coefficient k is D^k(a)/k!.
YSeries exp_apply(const DerivationSpec& d, const Element& a, unsigned order);

/// Randomized check of e^{yD}(ab) = e^{yD}(a) e^{yD}(b) for d/dx and
/// l_0 d/dx over generators |n| <= max_index.
VerifyReport verify_automorphism(unsigned samples, unsigned order, std::uint64_t seed,
                                 int max_index = 3);

}  // namespace fcalc
