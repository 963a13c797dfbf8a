#pragma once

#include <cstddef>
#include <vector>

#include "pbell/rational.hpp"

namespace pbell {

// Formal power series over Rational, truncated at a fixed order. Coefficients
// are ordinary (c_n of sum c_n t^n); EGF coefficients are extracted on demand
// via egf_coefficient. Mixed-order arithmetic truncates to the minimum order.
// Immutable after construction.
class TruncatedSeries {
 public:
  // coeffs = c_0..c_N; order is N = coeffs.size()-1. Requires nonempty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries constant(const Rational& c, std::size_t order);
  // The variable t, as a series of the given order (order >= 1).
  static TruncatedSeries variable(std::size_t order);
  // Truncation of e^{c t}.
  static TruncatedSeries exp_ct(const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& coeff(std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncatedSeries add(const TruncatedSeries& other) const;
  TruncatedSeries multiply(const TruncatedSeries& other) const;
  TruncatedSeries power(unsigned long k) const;
  // exp(this). Requires a zero constant term; throws std::invalid_argument.
  TruncatedSeries exponential() const;

  // c_n * n!. Throws std::out_of_range for n > order.
  Rational egf_coefficient(std::size_t n) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.add(b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.multiply(b);
}

}  // namespace pbell
