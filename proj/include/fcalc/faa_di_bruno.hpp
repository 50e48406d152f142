#pragma once

// The derivation D on C[y_0, y_1, ...; x_1, x_2, ...] with
//   D y_i = y_{i+1} x_1,   D x_j = x_{j+1},
// whose powers applied to y_0 encode Faa di Bruno's formula, together with
// the substitution phi_B and the umbral shifts D_B it determines.

#include "fcalc/rational.hpp"
#include "fcalc/report.hpp"
#include "fcalc/upoly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fcalc {

struct FdbVar {
  enum class Kind : std::uint8_t { Y, X };
  Kind kind;
  unsigned index;

  static FdbVar y(unsigned i) { return {Kind::Y, i}; }
  static FdbVar x(unsigned j) { return {Kind::X, j}; }

  friend auto operator<=>(const FdbVar&, const FdbVar&) = default;
};

/// Sorted (variable, positive exponent) pairs.
using FdbMonomial = std::vector<std::pair<FdbVar, unsigned>>;

class FdbElement {
public:
  using TermMap = std::map<FdbMonomial, Rational>;

  FdbElement() = default;
  FdbElement(const Rational& c);  // NOLINT
  FdbElement(long c) : FdbElement(Rational(c)) {}  // NOLINT

  /// Throws std::invalid_argument for x_0 (the x alphabet starts at 1).
  static FdbElement var(FdbVar v, unsigned exponent = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FdbElement& operator+=(const FdbElement& o);
  FdbElement& operator-=(const FdbElement& o);
  friend FdbElement operator+(FdbElement a, const FdbElement& b) { return a += b; }
  friend FdbElement operator-(FdbElement a, const FdbElement& b) { return a -= b; }
  friend FdbElement operator*(const FdbElement& a, const FdbElement& b);
  friend FdbElement operator*(FdbElement a, const Rational& c);
  FdbElement operator-() const { return *this * Rational(-1); }

  friend bool operator==(const FdbElement& a, const FdbElement& b) { return a.terms_ == b.terms_; }

  void add_term(const FdbMonomial& m, const Rational& c);

private:
  TermMap terms_;
};

FdbMonomial multiply(const FdbMonomial& a, const FdbMonomial& b);

FdbElement fdb_D(const FdbElement& a);
/// D^n y_0 (integer coefficients).
FdbElement fdb_D_power_y0(unsigned n);
/// Coefficients D^n(y_0)/n! of e^{zD} y_0 for n = 0..order.
std::vector<FdbElement> exp_zD_y0(unsigned order);

/// The y-coefficients of e^{y d/dx} f(g(x)) computed two ways.
struct ComposeResult {
  /// Expansion of f(g(x+y)) by polynomial composition.
  std::vector<UPoly> direct;
  /// D^n(y_0)/n! with y_n := f^(n)(g(x)) and x_m := g^(m)(x).
  std::vector<UPoly> via_faa_di_bruno;
  bool agree = false;
  std::optional<unsigned> first_mismatch;
};

ComposeResult compose_oracle(const UPoly& f, const UPoly& g, unsigned order);

VerifyReport verify_faa_di_bruno(unsigned samples, unsigned max_degree, unsigned order,
                                 std::uint64_t seed);

/// B_1, B_2, ..., B_M with B_1 != 0 (std::invalid_argument otherwise).
class BSequence {
public:
  explicit BSequence(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  /// 1-based; throws std::out_of_range past the end.
  const Rational& at(std::size_t i) const;
  const std::vector<Rational>& values() const { return values_; }
  /// Extended by zeros to at least `length` entries.
  BSequence padded(std::size_t length) const;

  friend bool operator==(const BSequence&, const BSequence&) = default;

private:
  std::vector<Rational> values_;
};

/// y_j -> 1, x_i -> B_i x. Throws std::out_of_range when some x_i has i > |B|.
UPoly phi_B(const BSequence& b, const FdbElement& a);

/// D_B x^k for k = 0..depth-1.
struct UmbralTable {
  BSequence b;
  std::vector<UPoly> images;

  /// D_B applied to p by linearity; p must have degree < images.size().
  UPoly apply(const UPoly& p) const;
  friend bool operator==(const UmbralTable&, const UmbralTable&) = default;
};

/// Solves D_B^m(1) = phi_B(D^m y_0), m = 1..depth, one power of x at a time.
/// B is zero-extended to `depth` entries. Throws std::logic_error if the
/// solved table fails the defining identity.
UmbralTable umbral_solve(const BSequence& b, unsigned depth);

}  // namespace fcalc
