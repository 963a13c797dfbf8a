#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pbell/rational.hpp"

namespace pbell {

// C(n, k); zero outside 0 <= k <= n.
Rational binomial(unsigned long n, long k);

// n! / prod parts_i!. Requires sum(parts) == n.
Rational multinomial(unsigned long n, std::span<const unsigned long> parts);

// All tuples (l_1..l_k) of positive integers summing to total, lexicographic.
// k = 0 yields the empty tuple iff total == 0.
void for_each_composition(unsigned long total, unsigned long k,
                          const std::function<void(std::span<const unsigned long>)>& visit);
std::vector<std::vector<unsigned long>> compositions(unsigned long total, unsigned long k);

// Weak version: parts may be zero. Used for multinomial moment expansions.
void for_each_weak_composition(unsigned long total, unsigned long k,
                               const std::function<void(std::span<const unsigned long>)>& visit);

// Stirling numbers of the second kind, triangle recurrence, memoized.
Rational stirling2(unsigned long n, unsigned long k);

// r-Stirling numbers {n+r, k+r}_r as the finite binomial sum over stirling2.
Rational r_stirling2(unsigned long n, unsigned long k, unsigned long r);

// (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned long k);

// phi_n(x) = sum_k {n,k} x^k; phi_n(1) are the Bell numbers.
Rational bell_poly(unsigned long n, const Rational& x);

// phi_{n,r}(x) = sum_k {n+r,k+r}_r x^k.
Rational r_bell_poly(unsigned long n, unsigned long r, const Rational& x);

// Partial (incomplete) Bell polynomial B_{n,k}(x_1..x_{n-k+1}), computed as
// the explicit sum over block-size multiplicities. Requires n >= k and
// xs.size() >= n-k+1 (for n == k == 0 the empty sequence is fine).
Rational partial_bell(unsigned long n, unsigned long k, std::span<const Rational> xs);

// Right-hand side of Spivey's Bell-number relation; equals phi_{n+k}(1).
Rational spivey_classical_rhs(unsigned long n, unsigned long k);

}  // namespace pbell
