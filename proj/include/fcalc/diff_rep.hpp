#pragma once

// Subscript shifts l_n -> l_{n+k}. The shift by one intertwines d/dx with
// l_0(x) d/dx, which lets expansions for the second operator be read off
// from expansions for the first.

#include "fcalc/element.hpp"
#include "fcalc/report.hpp"
#include "fcalc/yseries.hpp"

#include <cstdint>

namespace fcalc {

class SubstMap {
public:
  explicit SubstMap(int shift) : shift_(shift) {}

  int shift() const { return shift_; }
  SubstMap inverse() const { return SubstMap(-shift_); }

  Element operator()(const Element& a) const { return a.shifted(shift_); }
  YSeries operator()(const YSeries& s) const {
    return s.map([this](const Element& c) { return c.shifted(shift_); });
  }

private:
  int shift_;
};

inline SubstMap shift_map(int k) { return SubstMap(k); }

/// Checks phi o d/dx = (l_0 d/dx) o phi and phi^{-1} o (l_0 d/dx) = d/dx o phi^{-1}
/// on every generator l_n with |n| <= max_index and on `random_products`
/// seeded random products of generator powers.
VerifyReport verify_intertwine(unsigned max_index, unsigned random_products = 50,
                               std::uint64_t seed = 1);

/// phi applied coefficientwise to e^{y d/dx} phi^{-1}(a); equals e^{y l_0 d/dx} a.
YSeries lift_exp(const Element& a, unsigned order);

}  // namespace fcalc
