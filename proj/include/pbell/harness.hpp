#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbell/moments.hpp"
#include "pbell/rational.hpp"

namespace pbell {

enum class IdentityId {
  EQ1,
  EQ5,
  EQ7,
  EQ8,
  EQ9,
  EQ18,
  T2_1_VS_EGF,
  T2_3,
  T2_4,
  T2_5,
  T2_6,
  T2_7,
  REDUCTION_CHAIN,
  BERNOULLI_SCALING,
  DET_SCALING,
  ROW_SUM,
};

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

// Grid ceilings; defaults match the desk-scale suite.
struct GridConfig {
  unsigned long max_sum = 10;  // bound on n, n+k, j+n, l+n as applicable
  unsigned long max_r = 3;
  std::vector<Rational> xs = {Rational(0), Rational(1), Rational(1, 2), Rational(-1),
                              Rational(2)};
  std::vector<Rational> ys = {Rational(1), Rational(1, 2), Rational(-1)};
};

struct CaseFailure {
  std::string params;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity;
  std::string grid;
  long cases_run = 0;
  std::vector<CaseFailure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Evaluates both sides of the named identity over the grid; exact comparison,
// deterministic case order. Models are ignored by the classical identities.
VerificationReport verify(IdentityId id, const GridConfig& grid,
                          const std::vector<MomentModel>& models);

// det:1, det:2, bernoulli:1/2, binomial:3,1/3, poisson:2/3, geometric:1/2,
// finite:0:1/3,1:1/3,5:1/3.
const std::vector<MomentModel>& default_models();

struct McEstimate {
  std::string target;
  long samples = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  Rational exact;
  double z_score = 0.0;

  nlohmann::json to_json() const;
};

// Monte Carlo estimate of E[S_k^n] against the exact sum_moment value.
// Requires samples >= 100. Bit-reproducible for a fixed seed.
McEstimate mc_check(const MomentModel& model, unsigned long n, unsigned long k,
                    long samples, std::uint64_t seed);

}  // namespace pbell
