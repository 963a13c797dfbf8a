#pragma once

// Independent brute-force oracles used by the tests. Nothing here calls the
// implementation paths it is used to check.

#include <algorithm>
#include <vector>

#include "pbell/rational.hpp"

namespace pbell::oracles {

// Bell numbers from the binomial recurrence phi_{n+1} = sum C(n,k) phi_k,
// seeded with phi_0 = 1. Binomials come from Pascal's triangle.
inline std::vector<Integer> pascal_row(unsigned long n) {
  std::vector<Integer> row{Integer(1)};
  for (unsigned long i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, Integer(1));
    for (unsigned long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

inline Integer pascal_binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  return pascal_row(n)[k];
}

inline Integer bell_number(unsigned long n) {
  std::vector<Integer> phi{Integer(1)};
  for (unsigned long m = 0; m < n; ++m) {
    Integer next(0);
    auto row = pascal_row(m);
    for (unsigned long k = 0; k <= m; ++k) next += row[k] * phi[k];
    phi.push_back(next);
  }
  return phi[n];
}

// Counts partitions of {1..n} into exactly k nonempty blocks by enumerating
// restricted-growth strings: element i joins one of the blocks used so far
// or opens a new one.
inline void partitions_rec(unsigned long n, unsigned long i, unsigned long blocks,
                           unsigned long k, Integer& count) {
  if (i == n) {
    if (blocks == k) ++count;
    return;
  }
  for (unsigned long b = 0; b <= blocks; ++b) {
    partitions_rec(n, i + 1, std::max(blocks, b + 1), k, count);
  }
}

inline Integer count_partitions(unsigned long n, unsigned long k) {
  if (n == 0) return k == 0 ? Integer(1) : Integer(0);
  Integer count(0);
  partitions_rec(n, 0, 0, k, count);
  return count;
}

// Partial Bell polynomial through the triangular recurrence
// B_{n,k} = sum_i C(n-1,i-1) x_i B_{n-i,k-1}.
inline Rational partial_bell_recurrence(unsigned long n, unsigned long k,
                                        const std::vector<Rational>& xs) {
  if (n == 0 && k == 0) return Rational(1);
  if (n == 0 || k == 0) return Rational(0);
  Rational sum(0);
  for (unsigned long i = 1; i + k <= n + 1; ++i) {
    sum += Rational(pascal_binomial(n - 1, i - 1)) * xs[i - 1] *
           partial_bell_recurrence(n - i, k - 1, xs);
  }
  return sum;
}

}  // namespace pbell::oracles
