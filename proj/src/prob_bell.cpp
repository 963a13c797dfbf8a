#include "pbell/prob_bell.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "pbell/combinatorics.hpp"
#include "pbell/series.hpp"

namespace pbell {

namespace {

using StirlingKey = std::tuple<std::string, unsigned long, unsigned long, unsigned long>;

Rational alternating_sign(unsigned long parity) {
  return parity % 2 == 0 ? Rational(1) : Rational(-1);
}

// E[(S_j + r)^n] by the binomial theorem over sum_moment.
Rational shifted_sum_moment(const MomentModel& model, unsigned long j, unsigned long r,
                            unsigned long n) {
  Rational sum(0);
  for (unsigned long i = 0; i <= n; ++i) {
    sum += binomial(n, static_cast<long>(i)) * rational_pow(Rational(r), n - i) *
           model.sum_moment(j, i);
  }
  return sum;
}

}  // namespace

Rational prob_r_stirling2(const MomentModel& model, unsigned long n, unsigned long k,
                          unsigned long r) {
  static std::map<StirlingKey, Rational> memo;
  static std::mutex mu;
  StirlingKey key{model.canonical_id(), n, k, r};
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Rational sum(0);
  for (unsigned long j = 0; j <= k; ++j) {
    sum += binomial(k, static_cast<long>(j)) * alternating_sign(k - j) *
           shifted_sum_moment(model, j, r, n);
  }
  Rational value = sum / Rational(factorial(k));
  std::lock_guard lock(mu);
  memo.emplace(std::move(key), value);
  return value;
}

Rational prob_stirling2(const MomentModel& model, unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  return prob_r_stirling2(model, n, k, 0);
}

Rational prob_r_stirling2_egf(const MomentModel& model, unsigned long n, unsigned long k,
                              unsigned long r) {
  std::size_t order = n + 2;
  TruncatedSeries base =
      model.mgf_series(order).add(TruncatedSeries::constant(Rational(-1), order));
  TruncatedSeries series =
      base.power(k).multiply(TruncatedSeries::exp_ct(Rational(r), order));
  return series.egf_coefficient(n) / Rational(factorial(k));
}

Rational prob_bell_poly(const MomentModel& model, unsigned long n, const Rational& x) {
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) {
    sum += prob_stirling2(model, n, k) * rational_pow(x, k);
  }
  return sum;
}

Rational prob_r_bell_poly(const MomentModel& model, unsigned long n, unsigned long r,
                          const Rational& x) {
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) {
    sum += prob_r_stirling2(model, n, k, r) * rational_pow(x, k);
  }
  return sum;
}

Rational prob_r_bell_via_partial_bell(const MomentModel& model, unsigned long n,
                                      unsigned long r, const Rational& x) {
  Rational sum(0);
  for (unsigned long l = 0; l <= n; ++l) {
    Rational inner(0);
    for (unsigned long k = 0; k <= l; ++k) {
      std::vector<Rational> xs(l - k + 1);
      for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = x * model.moment(i + 1);
      inner += partial_bell(l, k, xs);
    }
    sum += binomial(n, static_cast<long>(l)) * inner * rational_pow(Rational(r), n - l);
  }
  return sum;
}

Rational recurrence_step(const MomentModel& model, unsigned long n, unsigned long r,
                         const Rational& x) {
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) {
    sum += binomial(n, static_cast<long>(k)) * model.moment(k + 1) *
           prob_r_bell_poly(model, n - k, r, x);
  }
  return x * sum + Rational(r) * prob_r_bell_poly(model, n, r, x);
}

Rational spivey_general_rhs(const MomentModel& model, const Rational& y, unsigned long r,
                            unsigned long n, unsigned long j) {
  Rational total(0);
  for (unsigned long l = 0; l <= n; ++l) {
    Rational outer = binomial(n, static_cast<long>(l)) * rational_pow(Rational(r), n - l);
    if (outer == 0) continue;
    Rational inner(0);
    for (unsigned long k = 0; k <= l; ++k) {
      Rational weight = rational_pow(y, k) / Rational(factorial(k));
      for (unsigned long m = 0; m <= j; ++m) {
        Rational comp_sum(0);
        for_each_composition(l, k, [&](std::span<const unsigned long> parts) {
          comp_sum += multinomial(l, parts) * model.joint_moment(j - m, parts);
        });
        if (comp_sum == 0) continue;
        inner += weight * binomial(j, static_cast<long>(m)) * comp_sum *
                 prob_r_bell_poly(model, m, r, y);
      }
    }
    total += outer * inner;
  }
  return total;
}

Rational spivey_numbers_rhs(const MomentModel& model, unsigned long n, unsigned long l) {
  Rational total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    for (unsigned long m = 0; m <= l; ++m) {
      Rational comp_sum(0);
      for_each_composition(n, k, [&](std::span<const unsigned long> parts) {
        comp_sum += multinomial(n, parts) * model.joint_moment(l - m, parts);
      });
      if (comp_sum == 0) continue;
      total += binomial(l, static_cast<long>(m)) * comp_sum / Rational(factorial(k)) *
               prob_bell_poly(model, m, Rational(1));
    }
  }
  return total;
}

Rational spivey_poly_rhs(const MomentModel& model, const Rational& y, unsigned long n,
                         unsigned long l) {
  Rational total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    Rational weight = rational_pow(y, k) / Rational(factorial(k));
    for (unsigned long m = 0; m <= l; ++m) {
      Rational comp_sum(0);
      for_each_composition(n, k, [&](std::span<const unsigned long> parts) {
        comp_sum += multinomial(n, parts) * model.joint_moment(l - m, parts);
      });
      if (comp_sum == 0) continue;
      total += binomial(l, static_cast<long>(m)) * weight * comp_sum *
               prob_bell_poly(model, m, y);
    }
  }
  return total;
}

}  // namespace pbell
