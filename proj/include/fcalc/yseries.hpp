#pragma once

#include "fcalc/element.hpp"

#include <vector>

namespace fcalc {

/// Power series in the expansion variable y, truncated after y^order,
/// with Element coefficients.
class YSeries {
public:
  explicit YSeries(unsigned order) : coeffs_(order + 1) {}
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit YSeries(std::vector<Element> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Element& coeff(unsigned k) const { return coeffs_.at(k); }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  YSeries truncate(unsigned order) const;
  /// Applies f to every coefficient.
  template <class F>
  YSeries map(F&& f) const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return YSeries(std::move(out));
  }

  // Binary operations require equal orders (std::invalid_argument otherwise).
  friend YSeries operator+(const YSeries& a, const YSeries& b);
  friend YSeries operator-(const YSeries& a, const YSeries& b);
  friend YSeries operator*(const YSeries& a, const YSeries& b);
  friend YSeries operator*(const YSeries& a, const Element& c);

  friend bool operator==(const YSeries& a, const YSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<Element> coeffs_;
};

/// Series with `c` in degree 0 and zeros elsewhere.
YSeries constant_series(const Element& c, unsigned order);

}  // namespace fcalc
