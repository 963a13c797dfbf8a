#include "pbell/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace pbell {

Rational binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
  return Rational(b);
}

Rational multinomial(unsigned long n, std::span<const unsigned long> parts) {
  unsigned long sum = 0;
  for (auto p : parts) sum += p;
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  Rational result(factorial(n));
  for (auto p : parts) result /= Rational(factorial(p));
  return result;
}

namespace {

void compositions_rec(unsigned long remaining, unsigned long slots, unsigned long min_part,
                      std::vector<unsigned long>& prefix,
                      const std::function<void(std::span<const unsigned long>)>& visit) {
  if (slots == 0) {
    if (remaining == 0) visit(prefix);
    return;
  }
  unsigned long upper = remaining;  // remaining parts need >= min_part*(slots-1)
  for (unsigned long first = min_part;
       first + min_part * (slots - 1) <= upper; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, slots - 1, min_part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_composition(unsigned long total, unsigned long k,
                          const std::function<void(std::span<const unsigned long>)>& visit) {
  std::vector<unsigned long> prefix;
  prefix.reserve(k);
  compositions_rec(total, k, 1, prefix, visit);
}

std::vector<std::vector<unsigned long>> compositions(unsigned long total, unsigned long k) {
  std::vector<std::vector<unsigned long>> out;
  for_each_composition(total, k, [&](std::span<const unsigned long> c) {
    out.emplace_back(c.begin(), c.end());
  });
  return out;
}

void for_each_weak_composition(unsigned long total, unsigned long k,
                               const std::function<void(std::span<const unsigned long>)>& visit) {
  std::vector<unsigned long> prefix;
  prefix.reserve(k);
  compositions_rec(total, k, 0, prefix, visit);
}

Rational stirling2(unsigned long n, unsigned long k) {
  static std::map<std::pair<unsigned long, unsigned long>, Integer> table;
  static std::mutex mu;
  if (k > n) return Rational(0);
  if (n == 0) return Rational(1);  // {0,0}
  if (k == 0) return Rational(0);
  std::lock_guard lock(mu);
  // Fill rows bottom-up so the recursion never re-locks.
  std::function<Integer(unsigned long, unsigned long)> get =
      [&](unsigned long nn, unsigned long kk) -> Integer {
    if (kk > nn) return Integer(0);
    if (nn == 0) return Integer(1);
    if (kk == 0) return Integer(0);
    auto it = table.find({nn, kk});
    if (it != table.end()) return it->second;
    Integer v = Integer(kk) * get(nn - 1, kk) + get(nn - 1, kk - 1);
    table.emplace(std::make_pair(nn, kk), v);
    return v;
  };
  return Rational(get(n, k));
}

Rational r_stirling2(unsigned long n, unsigned long k, unsigned long r) {
  if (k > n) return Rational(0);
  Rational sum(0);
  for (unsigned long j = k; j <= n; ++j) {
    sum += binomial(n, static_cast<long>(j)) * stirling2(j, k) *
           rational_pow(Rational(r), n - j);
  }
  return sum;
}

Rational falling_factorial(const Rational& x, unsigned long k) {
  Rational result(1);
  for (unsigned long i = 0; i < k; ++i) result *= x - Rational(i);
  return result;
}

Rational bell_poly(unsigned long n, const Rational& x) {
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) sum += stirling2(n, k) * rational_pow(x, k);
  return sum;
}

Rational r_bell_poly(unsigned long n, unsigned long r, const Rational& x) {
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) sum += r_stirling2(n, k, r) * rational_pow(x, k);
  return sum;
}

namespace {

// Enumerate multiplicity vectors (l_1..l_m) with sum l_i = k and
// sum i*l_i = n, accumulating the B_{n,k} summand for each.
void partial_bell_rec(unsigned long m, unsigned long idx, unsigned long blocks_left,
                      unsigned long weight_left, std::span<const Rational> xs,
                      const Rational& partial, Rational& acc) {
  if (idx > m) {
    if (blocks_left == 0 && weight_left == 0) acc += partial;
    return;
  }
  for (unsigned long l = 0; l <= blocks_left && l * idx <= weight_left; ++l) {
    Rational factor = partial;
    if (l > 0) {
      Rational unit = xs[idx - 1] / Rational(factorial(idx));
      factor *= rational_pow(unit, l) / Rational(factorial(l));
    }
    partial_bell_rec(m, idx + 1, blocks_left - l, weight_left - l * idx, xs, factor, acc);
  }
}

}  // namespace

Rational partial_bell(unsigned long n, unsigned long k, std::span<const Rational> xs) {
  if (k > n) throw std::invalid_argument("partial_bell: requires n >= k");
  unsigned long m = n - k + 1;
  if (n == 0) return Rational(1);  // B_{0,0}
  if (k == 0) return Rational(0);
  if (xs.size() < m) throw std::invalid_argument("partial_bell: too few arguments");
  Rational acc(0);
  partial_bell_rec(m, 1, k, n, xs, Rational(1), acc);
  return acc * Rational(factorial(n));
}

Rational spivey_classical_rhs(unsigned long n, unsigned long k) {
  Rational sum(0);
  for (unsigned long l = 0; l <= k; ++l) {
    Rational phi_l = bell_poly(l, Rational(1));
    for (unsigned long j = 0; j <= n; ++j) {
      // 0^0 = 1 at j = 0, l = k.
      sum += rational_pow(Rational(j), k - l) * binomial(k, static_cast<long>(l)) *
             stirling2(n, j) * phi_l;
    }
  }
  return sum;
}

}  // namespace pbell
