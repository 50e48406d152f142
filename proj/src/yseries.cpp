#include "fcalc/yseries.hpp"

#include <stdexcept>

namespace fcalc {

namespace {

void require_same_order(const YSeries& a, const YSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("YSeries orders differ: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

}  // namespace

YSeries::YSeries(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("YSeries needs at least one coefficient");
}

bool YSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

YSeries YSeries::truncate(unsigned order) const {
  std::vector<Element> out(order + 1);
  for (unsigned k = 0; k <= order && k < coeffs_.size(); ++k) out[k] = coeffs_[k];
  return YSeries(std::move(out));
}

YSeries operator+(const YSeries& a, const YSeries& b) {
  require_same_order(a, b);
  std::vector<Element> out = a.coeffs_;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.coeffs_[k];
  return YSeries(std::move(out));
}

YSeries operator-(const YSeries& a, const YSeries& b) {
  require_same_order(a, b);
  std::vector<Element> out = a.coeffs_;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b.coeffs_[k];
  return YSeries(std::move(out));
}

YSeries operator*(const YSeries& a, const YSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return YSeries(std::move(out));
}

YSeries operator*(const YSeries& a, const Element& c) {
  return a.map([&](const Element& e) { return e * c; });
}

YSeries constant_series(const Element& c, unsigned order) {
  std::vector<Element> out(order + 1);
  out[0] = c;
  return YSeries(std::move(out));
}

}  // namespace fcalc
