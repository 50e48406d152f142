#pragma once

// Shorthands shared by the unit tests.

#include "fcalc/element.hpp"
#include "fcalc/format.hpp"
#include "fcalc/yseries.hpp"

#include <doctest.h>

#include <ostream>

namespace fcalc {

inline Element gen(int n, const Exponent& e = Exponent(1)) { return Element::generator(n, e); }
inline Element x_(const Exponent& e = Exponent(1)) { return gen(0, e); }
inline Element log_(const Exponent& e = Exponent(1)) { return gen(1, e); }
inline Exponent P(const char* name) { return Exponent::param(name); }
inline ParamPoly PP(const char* name) { return ParamPoly::param(name); }
inline Rational Q(long p, long q = 1) {
  Rational v(p, q);
  v.canonicalize();
  return v;
}

inline std::ostream& operator<<(std::ostream& os, const Element& a) { return os << to_text(a); }
inline std::ostream& operator<<(std::ostream& os, const YSeries& s) { return os << to_text(s); }
inline std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << to_text(e); }
inline std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const FdbElement& a) { return os << to_text(a); }

inline YSeries series(std::vector<Element> c) { return YSeries(std::move(c)); }

}  // namespace fcalc
