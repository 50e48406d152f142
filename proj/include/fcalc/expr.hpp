#pragma once

// Expression grammar for the command line.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ('-')* power)?        right associative
//   primary := integer | name | func '(' expr ')' | '(' expr ')'
//
// Names: `x` (= l_0), `y_i` and `x_j` (j >= 1) for the Faa di Bruno
// alphabet, anything else alphanumeric is a symbolic parameter. Functions
// `log`, `exp` and `l_n` (n may be negative, e.g. l_-2) accept a generator
// argument and shift its index: log(l_n(x)) = l_{n+1}(x),
// exp(l_n(x)) = l_{n-1}(x), l_m(l_n(x)) = l_{m+n}(x). The name `y` is
// reserved for the expansion variable.

#include "fcalc/element.hpp"
#include "fcalc/faa_di_bruno.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fcalc {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, SourcePos pos);
  SourcePos pos() const { return pos_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

private:
  SourcePos pos_;
  std::string detail_;
};

struct Expr {
  enum class Kind { Number, Param, Generator, FdbVariable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Integer number;          // Number
  std::string name;        // Param
  int index = 0;           // Generator
  FdbVar var{FdbVar::Kind::Y, 0};  // FdbVariable
  std::vector<Expr> args;  // operands
  SourcePos pos;
};

Expr parse(std::string_view input);

/// Evaluation into the generator algebra; ParseError on unsupported forms
/// (non-affine exponents, division by non-monomials, Faa di Bruno names).
Element to_element(const Expr& e);
/// Evaluation of an exponent expression into an affine Exponent.
Exponent to_exponent(const Expr& e);
/// Evaluation into the Faa di Bruno alphabet.
FdbElement to_fdb_element(const Expr& e);

inline Element parse_element(std::string_view input) { return to_element(parse(input)); }

}  // namespace fcalc
