#include "pbell/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbell {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries needs at least the constant coefficient");
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  return constant(Rational(1), order);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> cs(order + 1, Rational(0));
  cs[0] = c;
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  if (order < 1) throw std::invalid_argument("variable needs order >= 1");
  std::vector<Rational> cs(order + 1, Rational(0));
  cs[1] = 1;
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries TruncatedSeries::exp_ct(const Rational& c, std::size_t order) {
  std::vector<Rational> cs(order + 1);
  Rational num(1);
  for (std::size_t n = 0; n <= order; ++n) {
    cs[n] = num / Rational(factorial(n));
    num *= c;
  }
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
  std::size_t n = std::min(order(), other.order());
  std::vector<Rational> cs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) cs[i] = coeffs_[i] + other.coeffs_[i];
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& other) const {
  std::size_t n = std::min(order(), other.order());
  std::vector<Rational> cs(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      cs[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries TruncatedSeries::power(unsigned long k) const {
  TruncatedSeries acc = one(order());
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc.multiply(base);
    base = base.multiply(base);
    k >>= 1;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::exponential() const {
  if (coeffs_[0] != 0) {
    throw std::invalid_argument("exponential requires a zero constant term");
  }
  // sum_{k<=order} a^k/k!; a^k = O(t^k), so the sum is exact at this order.
  TruncatedSeries acc = one(order());
  TruncatedSeries term = one(order());
  for (std::size_t k = 1; k <= order(); ++k) {
    term = term.multiply(*this);
    std::vector<Rational> scaled(term.coeffs_);
    Rational inv_k(1, static_cast<unsigned long>(k));
    for (auto& c : scaled) c *= inv_k;
    term = TruncatedSeries(std::move(scaled));
    acc = acc.add(term);
  }
  return acc;
}

Rational TruncatedSeries::egf_coefficient(std::size_t n) const {
  if (n > order()) {
    throw std::out_of_range("egf_coefficient: index beyond series order");
  }
  return coeffs_[n] * Rational(factorial(n));
}

}  // namespace pbell
