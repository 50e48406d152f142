#pragma once

// Canonical text and LaTeX renderings. The text form is what the expression
// parser reads back: generators print as x, log(x), exp(x) or l_n(x).

#include "fcalc/element.hpp"
#include "fcalc/faa_di_bruno.hpp"
#include "fcalc/upoly.hpp"
#include "fcalc/yseries.hpp"

#include <string>

namespace fcalc {

std::string generator_name(int index);

std::string to_text(const ParamPoly& p);
std::string to_text(const Exponent& e);
std::string to_text(const Monomial& m);
std::string to_text(const Element& a);
/// Sum of coefficient * y^k; `var` names the expansion variable.
std::string to_text(const YSeries& s, const std::string& var = "y");
std::string to_text(const UPoly& p);
std::string to_text(const FdbElement& a);

std::string to_latex(const ParamPoly& p);
std::string to_latex(const Exponent& e);
std::string to_latex(const Element& a);
std::string to_latex(const YSeries& s, const std::string& var = "y");
std::string to_latex(const UPoly& p);
std::string to_latex(const FdbElement& a);

}  // namespace fcalc
