#include "fcalc/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace fcalc {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      detail_(message) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (in[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      out.push_back({Tok::Number, std::string(in.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_')) ++j;
      // l_-n: the minus belongs to the generator index.
      if (in.substr(i, j - i) == "l_" && j + 1 < in.size() && in[j] == '-' &&
          std::isdigit(static_cast<unsigned char>(in[j + 1]))) {
        ++j;
        while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      }
      out.push_back({Tok::Ident, std::string(in.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("syntax error: unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// "l_<int>" -> index
std::optional<int> generator_function(const std::string& name) {
  if (name == "log") return 1;
  if (name == "exp") return -1;
  if (name.size() > 2 && name.compare(0, 2, "l_") == 0) return parse_int(std::string_view(name).substr(2));
  return std::nullopt;
}

bool is_param_name(const std::string& name) {
  if (name == "x" || name == "y" || name == "log" || name == "exp") return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse_all() {
    Expr e = parse_sum();
    if (peek().kind != Tok::End) throw error("syntax error: unexpected " + describe(peek()));
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  ParseError error(const std::string& msg) const { return ParseError(msg, peek().pos); }

  static Expr node(Expr::Kind kind, SourcePos pos, std::vector<Expr> args) {
    Expr e;
    e.kind = kind;
    e.pos = pos;
    e.args = std::move(args);
    return e;
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = take();
      Expr rhs = parse_product();
      lhs = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = take();
      Expr rhs = parse_unary();
      lhs = node(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, op.pos,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek().kind == Tok::Minus) {
      const Token op = take();
      return node(Expr::Kind::Neg, op.pos, {parse_unary()});
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (peek().kind != Tok::Caret) return base;
    const Token op = take();
    Expr exponent = parse_exponent();
    return node(Expr::Kind::Pow, op.pos, {std::move(base), std::move(exponent)});
  }

  Expr parse_exponent() {
    if (peek().kind == Tok::Minus) {
      const Token op = take();
      return node(Expr::Kind::Neg, op.pos, {parse_exponent()});
    }
    return parse_power();
  }

  Expr parse_primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        Expr e;
        e.kind = Expr::Kind::Number;
        e.number = Integer(t.text);
        e.pos = t.pos;
        return e;
      }
      case Tok::LParen: {
        take();
        Expr inner = parse_sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: return parse_name();
      default: throw error("syntax error: unexpected " + describe(t));
    }
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw error("syntax error: expected " + what + " but found " + describe(peek()));
    take();
  }

  Expr parse_name() {
    const Token t = take();
    Expr e;
    e.pos = t.pos;
    if (peek().kind == Tok::LParen) {
      auto shift = generator_function(t.text);
      if (!shift) throw ParseError("unknown identifier '" + t.text + "'", t.pos);
      take();
      Expr arg = parse_sum();
      expect(Tok::RParen, "')'");
      if (arg.kind != Expr::Kind::Generator)
        throw ParseError("'" + t.text + "' must be applied to x or another generator", arg.pos);
      e.kind = Expr::Kind::Generator;
      e.index = arg.index + *shift;
      return e;
    }
    if (t.text == "x") {
      e.kind = Expr::Kind::Generator;
      e.index = 0;
      return e;
    }
    if (generator_function(t.text)) throw error("syntax error: expected '(' after '" + t.text + "'");
    if (t.text.size() > 2 && (t.text[0] == 'y' || t.text[0] == 'x') && t.text[1] == '_') {
      auto idx = parse_int(std::string_view(t.text).substr(2));
      if (!idx || *idx < 0 || (t.text[0] == 'x' && *idx == 0))
        throw ParseError("unknown identifier '" + t.text + "'", t.pos);
      e.kind = Expr::Kind::FdbVariable;
      e.var = t.text[0] == 'y' ? FdbVar::y(static_cast<unsigned>(*idx)) : FdbVar::x(static_cast<unsigned>(*idx));
      return e;
    }
    if (t.text == "y")
      throw ParseError("unknown identifier 'y' (reserved for the expansion variable)", t.pos);
    if (!is_param_name(t.text)) throw ParseError("unknown identifier '" + t.text + "'", t.pos);
    e.kind = Expr::Kind::Param;
    e.name = t.text;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Element power_of(const Element& base, const Exponent& e, SourcePos pos) {
  if (auto n = e.as_integer()) {
    if (*n >= 0) return pow(base, static_cast<unsigned>(*n));
    auto inv = invert(base);
    if (!inv) throw ParseError("negative power of an expression that is not a single term", pos);
    return pow(*inv, static_cast<unsigned>(-*n));
  }
  if (base.size() != 1 || !(base.terms().begin()->second == ParamPoly(1L)))
    throw ParseError("non-integer powers need a single generator product as base", pos);
  Monomial m;
  for (const auto& [g, f] : base.terms().begin()->first.factors()) {
    auto scaled = f.times(e);
    if (!scaled) throw ParseError("exponent is not affine with integer parameter coefficients", pos);
    m = m * Monomial::generator(g, *scaled);
  }
  return Element::term(ParamPoly(1L), m);
}

}  // namespace

Expr parse(std::string_view input) { return Parser(lex(input)).parse_all(); }

Exponent to_exponent(const Expr& e) {
  const Element v = to_element(e);
  if (v.is_zero()) return Exponent();
  if (v.size() != 1 || !v.terms().begin()->first.is_one())
    throw ParseError("exponent must not contain generators", e.pos);
  auto out = Exponent::from_poly(v.terms().begin()->second);
  if (!out) throw ParseError("exponent is not affine with integer parameter coefficients", e.pos);
  return *out;
}

Element to_element(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return Element(Rational(e.number));
    case Expr::Kind::Param: return Element(ParamPoly::param(e.name));
    case Expr::Kind::Generator: return Element::generator(e.index);
    case Expr::Kind::FdbVariable:
      throw ParseError("y_i and x_j belong to the Faa di Bruno alphabet, not to this expression", e.pos);
    case Expr::Kind::Neg: return -to_element(e.args[0]);
    case Expr::Kind::Add: return to_element(e.args[0]) + to_element(e.args[1]);
    case Expr::Kind::Sub: return to_element(e.args[0]) - to_element(e.args[1]);
    case Expr::Kind::Mul: return to_element(e.args[0]) * to_element(e.args[1]);
    case Expr::Kind::Div: {
      auto inv = invert(to_element(e.args[1]));
      if (!inv) throw ParseError("can only divide by a single term with a rational coefficient", e.pos);
      return to_element(e.args[0]) * *inv;
    }
    case Expr::Kind::Pow: return power_of(to_element(e.args[0]), to_exponent(e.args[1]), e.pos);
  }
  throw ParseError("unsupported expression", e.pos);
}

FdbElement to_fdb_element(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return FdbElement(Rational(e.number));
    case Expr::Kind::FdbVariable: return FdbElement::var(e.var);
    case Expr::Kind::Param:
    case Expr::Kind::Generator:
      throw ParseError("only y_i, x_j and numbers may appear in a Faa di Bruno expression", e.pos);
    case Expr::Kind::Neg: return -to_fdb_element(e.args[0]);
    case Expr::Kind::Add: return to_fdb_element(e.args[0]) + to_fdb_element(e.args[1]);
    case Expr::Kind::Sub: return to_fdb_element(e.args[0]) - to_fdb_element(e.args[1]);
    case Expr::Kind::Mul: return to_fdb_element(e.args[0]) * to_fdb_element(e.args[1]);
    case Expr::Kind::Div: {
      const FdbElement d = to_fdb_element(e.args[1]);
      if (d.size() != 1 || !d.terms().begin()->first.empty())
        throw ParseError("can only divide by a nonzero number", e.pos);
      return to_fdb_element(e.args[0]) * (Rational(1) / d.terms().begin()->second);
    }
    case Expr::Kind::Pow: {
      const Exponent p = to_exponent(e.args[1]);
      auto n = p.as_integer();
      if (!n || *n < 0) throw ParseError("powers in the Faa di Bruno alphabet must be nonnegative integers", e.pos);
      const FdbElement base = to_fdb_element(e.args[0]);
      FdbElement out(1L);
      for (long i = 0; i < *n; ++i) out = out * base;
      return out;
    }
  }
  throw ParseError("unsupported expression", e.pos);
}

}  // namespace fcalc
