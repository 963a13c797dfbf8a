#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pbell/rational.hpp"
#include "pbell/series.hpp"

namespace pbell {

enum class DistKind { deterministic, bernoulli, binomial, poisson, geometric, finite_support };

// A random variable given by its exact moment sequence E[Y^n]. Discrete
// built-ins are defined through exact factorial moments and converted with
// x^n = sum_k {n,k} (x)_k; finite-support models use the weighted power sum.
// Immutable; moment values are memoized per canonical id.
class MomentModel {
 public:
  static MomentModel deterministic(const Rational& c);
  static MomentModel bernoulli(const Rational& p);
  static MomentModel binomial(unsigned long m, const Rational& p);
  static MomentModel poisson(const Rational& lambda);
  // Supported on {1,2,3,...} with success probability p.
  static MomentModel geometric(const Rational& p);
  static MomentModel finite_support(std::vector<std::pair<Rational, Rational>> atoms);

  // Grammar: det:<q> | bernoulli:<q> | binomial:<int>,<q> | poisson:<q> |
  // geometric:<q> | finite:<v1>:<w1>,<v2>:<w2>,...
  static MomentModel parse(std::string_view spec);

  DistKind kind() const { return kind_; }
  const std::string& canonical_id() const { return canonical_id_; }

  // Exact E[Y^n]; moment(0) = 1.
  Rational moment(unsigned long n) const;

  // Truncation of E[e^{tY}]: c_n = moment(n)/n!.
  TruncatedSeries mgf_series(std::size_t order) const;

  // E[S_k^n] for S_k the sum of k iid copies (S_0 = 0, 0^0 = 1).
  Rational sum_moment(unsigned long k, unsigned long n) const;

  // E[S_k^p prod_i Y_i^{l_i}], k = ls.size(), every l_i >= 1, via the
  // multinomial expansion of S_k^p. Throws on l_i = 0.
  Rational joint_moment(unsigned long p, std::span<const unsigned long> ls) const;

  // Same quantity through the independent factorized-series route
  // E[e^{S_k x} prod Y_i^{l_i}] = prod_i E[Y^{l_i} e^{Yx}].
  Rational joint_moment_series(unsigned long p, std::span<const unsigned long> ls) const;

  bool operator==(const MomentModel& other) const {
    return canonical_id_ == other.canonical_id_;
  }

 private:
  MomentModel(DistKind kind, std::vector<Rational> params, std::string canonical_id);

  // E[(Y)_k] for the factorial-moment-defined kinds.
  Rational factorial_moment(unsigned long k) const;

  DistKind kind_;
  std::vector<Rational> params_;  // layout depends on kind; finite: v1,w1,v2,w2,...
  std::string canonical_id_;

  friend class Sampler;
};

// Deterministic, seedable double-precision sampler for Monte Carlo checks.
// Identical (model, seed) pairs produce identical streams.
class Sampler {
 public:
  Sampler(MomentModel model, std::uint64_t seed);

  double sample();
  const MomentModel& model() const { return model_; }

 private:
  double uniform();  // in [0,1)

  MomentModel model_;
  std::mt19937_64 rng_;
};

}  // namespace pbell
