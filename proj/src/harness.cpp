#include "pbell/harness.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pbell/combinatorics.hpp"
#include "pbell/prob_bell.hpp"

namespace pbell {

namespace {

using Clock = std::chrono::steady_clock;

// Collects one lhs/rhs comparison per case; the grid loops below stay
// declarative.
struct Checker {
  VerificationReport report;

  void check(const std::string& params, const Rational& lhs, const Rational& rhs) {
    ++report.cases_run;
    if (lhs != rhs) {
      report.failures.push_back({params, to_string(lhs), to_string(rhs)});
    }
  }
};

std::string fmt_case(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : kv) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

std::string num(unsigned long v) { return std::to_string(v); }

const std::vector<Rational>& eq1_points() {
  static const std::vector<Rational> xs = {Rational(0), Rational(1),  Rational(2),
                                           Rational(3), Rational(-1), Rational(1, 2)};
  return xs;
}

void run_identity(IdentityId id, const GridConfig& grid,
                  const std::vector<MomentModel>& models, Checker& c) {
  const unsigned long N = grid.max_sum;
  const unsigned long R = grid.max_r;
  switch (id) {
    case IdentityId::EQ1:
      for (const auto& x : eq1_points()) {
        for (unsigned long n = 0; n <= N; ++n) {
          Rational lhs(0);
          for (unsigned long k = 0; k <= n; ++k) {
            lhs += stirling2(n, k) * falling_factorial(x, k);
          }
          c.check(fmt_case({{"n", num(n)}, {"x", to_string(x)}}), lhs, rational_pow(x, n));
        }
      }
      break;
    case IdentityId::EQ5:
      for (const auto& x : eq1_points()) {
        for (unsigned long r = 0; r <= R; ++r) {
          for (unsigned long n = 0; n <= N; ++n) {
            Rational lhs(0);
            for (unsigned long k = 0; k <= n; ++k) {
              lhs += r_stirling2(n, k, r) * falling_factorial(x, k);
            }
            c.check(fmt_case({{"n", num(n)}, {"r", num(r)}, {"x", to_string(x)}}), lhs,
                    rational_pow(x + Rational(r), n));
          }
        }
      }
      break;
    case IdentityId::EQ7: {
      // Finite-sum r-Stirling numbers against the classical EGF
      // (e^t-1)^k e^{rt}/k!, realized with the unit-point model.
      MomentModel unit = MomentModel::deterministic(Rational(1));
      for (unsigned long r = 0; r <= R; ++r) {
        for (unsigned long n = 0; n <= N; ++n) {
          for (unsigned long k = 0; k <= n; ++k) {
            c.check(fmt_case({{"n", num(n)}, {"k", num(k)}, {"r", num(r)}}),
                    r_stirling2(n, k, r), prob_r_stirling2_egf(unit, n, k, r));
          }
        }
      }
      break;
    }
    case IdentityId::EQ8:
      for (unsigned long n = 0; n <= N + 5; ++n) {
        Rational rhs(0);
        for (unsigned long k = 0; k <= n; ++k) {
          rhs += binomial(n, static_cast<long>(k)) * bell_poly(k, Rational(1));
        }
        c.check(fmt_case({{"n", num(n)}}), bell_poly(n + 1, Rational(1)), rhs);
      }
      break;
    case IdentityId::EQ9:
      for (unsigned long n = 0; n <= N; ++n) {
        for (unsigned long k = 0; n + k <= N; ++k) {
          c.check(fmt_case({{"n", num(n)}, {"k", num(k)}}), spivey_classical_rhs(n, k),
                  bell_poly(n + k, Rational(1)));
        }
      }
      break;
    case IdentityId::EQ18:
      for (const auto& model : models) {
        for (const auto& x : grid.xs) {
          for (unsigned long n = 0; n <= N; ++n) {
            c.check(fmt_case({{"model", model.canonical_id()},
                              {"n", num(n)},
                              {"x", to_string(x)}}),
                    recurrence_step(model, n, 0, x), prob_bell_poly(model, n + 1, x));
          }
        }
      }
      break;
    case IdentityId::T2_1_VS_EGF:
      for (const auto& model : models) {
        for (unsigned long r = 0; r <= R; ++r) {
          for (unsigned long n = 0; n <= N + 2; ++n) {
            for (unsigned long k = 0; k <= n; ++k) {
              c.check(fmt_case({{"model", model.canonical_id()},
                                {"n", num(n)},
                                {"k", num(k)},
                                {"r", num(r)}}),
                      prob_r_stirling2(model, n, k, r),
                      prob_r_stirling2_egf(model, n, k, r));
            }
          }
        }
      }
      break;
    case IdentityId::T2_3:
      for (const auto& model : models) {
        for (unsigned long r = 0; r <= R; ++r) {
          for (const auto& x : grid.xs) {
            for (unsigned long n = 0; n <= N; ++n) {
              c.check(fmt_case({{"model", model.canonical_id()},
                                {"n", num(n)},
                                {"r", num(r)},
                                {"x", to_string(x)}}),
                      prob_r_bell_via_partial_bell(model, n, r, x),
                      prob_r_bell_poly(model, n, r, x));
            }
          }
        }
      }
      break;
    case IdentityId::T2_4:
      for (const auto& model : models) {
        for (unsigned long r = 0; r <= R; ++r) {
          for (const auto& x : grid.xs) {
            for (unsigned long n = 0; n <= N; ++n) {
              c.check(fmt_case({{"model", model.canonical_id()},
                                {"n", num(n)},
                                {"r", num(r)},
                                {"x", to_string(x)}}),
                      recurrence_step(model, n, r, x),
                      prob_r_bell_poly(model, n + 1, r, x));
            }
          }
        }
      }
      break;
    case IdentityId::T2_5:
      for (const auto& model : models) {
        for (unsigned long n = 0; n <= N; ++n) {
          for (unsigned long l = 0; n + l <= N; ++l) {
            c.check(fmt_case({{"model", model.canonical_id()},
                              {"n", num(n)},
                              {"l", num(l)}}),
                    spivey_numbers_rhs(model, n, l),
                    prob_bell_poly(model, l + n, Rational(1)));
          }
        }
      }
      break;
    case IdentityId::T2_6:
      for (const auto& model : models) {
        for (const auto& y : grid.ys) {
          for (unsigned long n = 0; n <= N; ++n) {
            for (unsigned long l = 0; n + l <= N; ++l) {
              c.check(fmt_case({{"model", model.canonical_id()},
                                {"y", to_string(y)},
                                {"n", num(n)},
                                {"l", num(l)}}),
                      spivey_poly_rhs(model, y, n, l),
                      prob_bell_poly(model, l + n, y));
            }
          }
        }
      }
      break;
    case IdentityId::T2_7:
      for (const auto& model : models) {
        for (const auto& y : grid.ys) {
          for (unsigned long r = 0; r <= R; ++r) {
            for (unsigned long n = 0; n <= N; ++n) {
              for (unsigned long j = 0; n + j <= N; ++j) {
                c.check(fmt_case({{"model", model.canonical_id()},
                                  {"y", to_string(y)},
                                  {"r", num(r)},
                                  {"n", num(n)},
                                  {"j", num(j)}}),
                        spivey_general_rhs(model, y, r, n, j),
                        prob_r_bell_poly(model, j + n, r, y));
              }
            }
          }
        }
      }
      break;
    case IdentityId::REDUCTION_CHAIN: {
      for (const auto& model : models) {
        for (unsigned long n = 0; n <= N; ++n) {
          for (unsigned long j = 0; n + j <= N; ++j) {
            for (const auto& y : grid.ys) {
              c.check(fmt_case({{"step", "T2_7_r0_vs_T2_6"},
                                {"model", model.canonical_id()},
                                {"y", to_string(y)},
                                {"n", num(n)},
                                {"j", num(j)}}),
                      spivey_general_rhs(model, y, 0, n, j),
                      spivey_poly_rhs(model, y, n, j));
            }
            c.check(fmt_case({{"step", "T2_6_y1_vs_T2_5"},
                              {"model", model.canonical_id()},
                              {"n", num(n)},
                              {"l", num(j)}}),
                    spivey_poly_rhs(model, Rational(1), n, j),
                    spivey_numbers_rhs(model, n, j));
          }
        }
      }
      MomentModel unit = MomentModel::deterministic(Rational(1));
      for (unsigned long n = 0; n <= N; ++n) {
        for (unsigned long l = 0; n + l <= N; ++l) {
          c.check(fmt_case({{"step", "T2_5_Y1_vs_EQ9"}, {"n", num(n)}, {"l", num(l)}}),
                  spivey_numbers_rhs(unit, n, l), spivey_classical_rhs(n, l));
        }
      }
      for (const auto& model : models) {
        for (const auto& y : grid.ys) {
          for (unsigned long r = 0; r <= R; ++r) {
            for (unsigned long j = 0; j + 1 <= N; ++j) {
              c.check(fmt_case({{"step", "T2_7_n1_vs_T2_4"},
                                {"model", model.canonical_id()},
                                {"y", to_string(y)},
                                {"r", num(r)},
                                {"j", num(j)}}),
                      spivey_general_rhs(model, y, r, 1, j),
                      recurrence_step(model, j, r, y));
            }
          }
        }
      }
      break;
    }
    case IdentityId::BERNOULLI_SCALING:
      for (const auto& p : {Rational(1, 2), Rational(1, 3)}) {
        MomentModel model = MomentModel::bernoulli(p);
        for (unsigned long n = 0; n <= N; ++n) {
          for (unsigned long k = 0; k <= n; ++k) {
            c.check(fmt_case({{"p", to_string(p)}, {"n", num(n)}, {"k", num(k)}}),
                    prob_stirling2(model, n, k), rational_pow(p, k) * stirling2(n, k));
          }
        }
      }
      break;
    case IdentityId::DET_SCALING:
      for (const auto& cval : {Rational(2), Rational(3)}) {
        MomentModel model = MomentModel::deterministic(cval);
        for (unsigned long n = 0; n <= N; ++n) {
          for (unsigned long k = 0; k <= n; ++k) {
            c.check(fmt_case({{"c", to_string(cval)}, {"n", num(n)}, {"k", num(k)}}),
                    prob_stirling2(model, n, k), rational_pow(cval, n) * stirling2(n, k));
          }
        }
      }
      break;
    case IdentityId::ROW_SUM:
      for (const auto& model : models) {
        for (unsigned long r = 0; r <= R; ++r) {
          for (unsigned long n = 0; n <= N; ++n) {
            Rational row(0);
            for (unsigned long k = 0; k <= n; ++k) row += prob_r_stirling2(model, n, k, r);
            c.check(fmt_case({{"model", model.canonical_id()},
                              {"n", num(n)},
                              {"r", num(r)}}),
                    row, prob_r_bell_poly(model, n, r, Rational(1)));
          }
        }
      }
      break;
  }
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::EQ1,         IdentityId::EQ5,
      IdentityId::EQ7,         IdentityId::EQ8,
      IdentityId::EQ9,         IdentityId::EQ18,
      IdentityId::T2_1_VS_EGF, IdentityId::T2_3,
      IdentityId::T2_4,        IdentityId::T2_5,
      IdentityId::T2_6,        IdentityId::T2_7,
      IdentityId::REDUCTION_CHAIN, IdentityId::BERNOULLI_SCALING,
      IdentityId::DET_SCALING, IdentityId::ROW_SUM};
  return ids;
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::EQ1: return "EQ1";
    case IdentityId::EQ5: return "EQ5";
    case IdentityId::EQ7: return "EQ7";
    case IdentityId::EQ8: return "EQ8";
    case IdentityId::EQ9: return "EQ9";
    case IdentityId::EQ18: return "EQ18";
    case IdentityId::T2_1_VS_EGF: return "T2_1_VS_EGF";
    case IdentityId::T2_3: return "T2_3";
    case IdentityId::T2_4: return "T2_4";
    case IdentityId::T2_5: return "T2_5";
    case IdentityId::T2_6: return "T2_6";
    case IdentityId::T2_7: return "T2_7";
    case IdentityId::REDUCTION_CHAIN: return "REDUCTION_CHAIN";
    case IdentityId::BERNOULLI_SCALING: return "BERNOULLI_SCALING";
    case IdentityId::DET_SCALING: return "DET_SCALING";
    case IdentityId::ROW_SUM: return "ROW_SUM";
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (auto id : all_identities()) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

VerificationReport verify(IdentityId id, const GridConfig& grid,
                          const std::vector<MomentModel>& models) {
  Checker checker;
  checker.report.identity = identity_name(id);
  {
    std::ostringstream os;
    os << "max_sum=" << grid.max_sum << " max_r=" << grid.max_r
       << " models=" << models.size();
    checker.report.grid = os.str();
  }
  auto start = Clock::now();
  run_identity(id, grid, models, checker);
  checker.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return checker.report;
}

const std::vector<MomentModel>& default_models() {
  static const std::vector<MomentModel> models = {
      MomentModel::deterministic(Rational(1)),
      MomentModel::deterministic(Rational(2)),
      MomentModel::bernoulli(Rational(1, 2)),
      MomentModel::binomial(3, Rational(1, 3)),
      MomentModel::poisson(Rational(2, 3)),
      MomentModel::geometric(Rational(1, 2)),
      MomentModel::finite_support({{Rational(0), Rational(1, 3)},
                                   {Rational(1), Rational(1, 3)},
                                   {Rational(5), Rational(1, 3)}}),
  };
  return models;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json failures_json = nlohmann::json::array();
  for (const auto& f : failures) {
    failures_json.push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"identity", identity},
          {"grid", grid},
          {"cases", cases_run},
          {"failures", failures_json},
          {"elapsed_ms", elapsed_ms}};
}

nlohmann::json McEstimate::to_json() const {
  return {{"target", target},   {"samples", samples},
          {"estimate", estimate}, {"stderr", stderr_},
          {"exact", to_string(exact)}, {"z_score", z_score}};
}

McEstimate mc_check(const MomentModel& model, unsigned long n, unsigned long k,
                    long samples, std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("mc_check: need at least 100 samples");
  Sampler sampler(model, seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (long i = 0; i < samples; ++i) {
    double s = 0.0;
    for (unsigned long c = 0; c < k; ++c) s += sampler.sample();
    double value = (n == 0) ? 1.0 : std::pow(s, static_cast<double>(n));
    double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  double variance = samples > 1 ? m2 / static_cast<double>(samples - 1) : 0.0;
  double se = std::sqrt(variance / static_cast<double>(samples));
  McEstimate est;
  {
    std::ostringstream os;
    os << "E[S_" << k << "^" << n << "] model=" << model.canonical_id();
    est.target = os.str();
  }
  est.samples = samples;
  est.estimate = mean;
  est.stderr_ = se;
  est.exact = model.sum_moment(k, n);
  est.z_score = se > 0.0 ? (mean - est.exact.get_d()) / se : 0.0;
  return est;
}

}  // namespace pbell
