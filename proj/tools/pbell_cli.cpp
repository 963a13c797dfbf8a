#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pbell/combinatorics.hpp"
#include "pbell/harness.hpp"
#include "pbell/moments.hpp"
#include "pbell/prob_bell.hpp"

namespace {

using pbell::Rational;

nlohmann::json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

struct TableOptions {
  std::string kind;
  std::string dist;
  unsigned long n_max = 0;
  unsigned long r = 0;
  std::string x = "1";
  std::string format = "plain";
};

struct EvalOptions {
  std::string target;
  std::string dist;
  std::optional<unsigned long> n, k, r, j, p;
  std::optional<std::string> x, y, ls;
};

struct VerifyOptions {
  std::vector<std::string> ids;
  unsigned long max_sum = 10;
  unsigned long max_r = 3;
  std::string dists;
  std::string format = "plain";
};

struct McOptions {
  std::string dist;
  unsigned long n = 0;
  unsigned long k = 0;
  long samples = 1000000;
  std::uint64_t seed = 0;
  double threshold = 5.0;
  std::string format = "plain";
};

bool is_triangle_kind(const std::string& kind) {
  return kind == "stirling" || kind == "r-stirling" || kind == "prob-stirling" ||
         kind == "prob-r-stirling";
}

bool is_prob_kind(const std::string& kind) { return kind.rfind("prob-", 0) == 0; }

Rational table_cell(const TableOptions& opt, const std::optional<pbell::MomentModel>& model,
                    unsigned long n, unsigned long k) {
  if (opt.kind == "stirling") return pbell::stirling2(n, k);
  if (opt.kind == "r-stirling") return pbell::r_stirling2(n, k, opt.r);
  if (opt.kind == "prob-stirling") return pbell::prob_stirling2(*model, n, k);
  return pbell::prob_r_stirling2(*model, n, k, opt.r);
}

Rational table_value(const TableOptions& opt, const std::optional<pbell::MomentModel>& model,
                     unsigned long n, const Rational& x) {
  if (opt.kind == "bell") return pbell::bell_poly(n, x);
  if (opt.kind == "r-bell") return pbell::r_bell_poly(n, opt.r, x);
  if (opt.kind == "prob-bell") return pbell::prob_bell_poly(*model, n, x);
  return pbell::prob_r_bell_poly(*model, n, opt.r, x);
}

int run_table(const TableOptions& opt) {
  std::optional<pbell::MomentModel> model;
  if (is_prob_kind(opt.kind)) {
    if (opt.dist.empty()) {
      std::cerr << "table: --dist is required for kind '" << opt.kind << "'\n";
      return 2;
    }
    model = pbell::MomentModel::parse(opt.dist);
  }
  Rational x = pbell::parse_rational(opt.x);
  if (is_triangle_kind(opt.kind)) {
    std::vector<std::vector<Rational>> rows;
    for (unsigned long n = 0; n <= opt.n_max; ++n) {
      std::vector<Rational> row;
      for (unsigned long k = 0; k <= n; ++k) row.push_back(table_cell(opt, model, n, k));
      rows.push_back(std::move(row));
    }
    if (opt.format == "json") {
      nlohmann::json jrows = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& v : row) jrow.push_back(rational_json(v));
        jrows.push_back(jrow);
      }
      std::cout << nlohmann::json{{"kind", opt.kind}, {"rows", jrows}} << "\n";
    } else if (opt.format == "csv") {
      std::cout << "n";
      for (unsigned long k = 0; k <= opt.n_max; ++k) std::cout << ",k" << k;
      std::cout << "\n";
      for (unsigned long n = 0; n <= opt.n_max; ++n) {
        std::cout << n;
        for (unsigned long k = 0; k <= opt.n_max; ++k) {
          std::cout << "," << (k <= n ? pbell::to_string(rows[n][k]) : "0");
        }
        std::cout << "\n";
      }
    } else {
      for (unsigned long n = 0; n <= opt.n_max; ++n) {
        std::cout << n << ":";
        for (const auto& v : rows[n]) std::cout << " " << pbell::to_string(v);
        std::cout << "\n";
      }
    }
    return 0;
  }
  // Bell-style kinds: one value per n.
  std::vector<Rational> values;
  for (unsigned long n = 0; n <= opt.n_max; ++n) values.push_back(table_value(opt, model, n, x));
  if (opt.format == "json") {
    nlohmann::json jvals = nlohmann::json::array();
    for (const auto& v : values) jvals.push_back(rational_json(v));
    std::cout << nlohmann::json{{"kind", opt.kind}, {"values", jvals}} << "\n";
  } else if (opt.format == "csv") {
    std::cout << "n,value\n";
    for (unsigned long n = 0; n <= opt.n_max; ++n) {
      std::cout << n << "," << pbell::to_string(values[n]) << "\n";
    }
  } else {
    for (unsigned long n = 0; n <= opt.n_max; ++n) {
      std::cout << n << ": " << pbell::to_string(values[n]) << "\n";
    }
  }
  return 0;
}

unsigned long require(const std::optional<unsigned long>& v, const char* flag) {
  if (!v) throw CLI::ValidationError(std::string("missing required parameter ") + flag);
  return *v;
}

std::vector<unsigned long> parse_ls(const std::string& text) {
  std::vector<unsigned long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    std::string tok = text.substr(start, pos - start);
    out.push_back(std::stoul(tok));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int run_eval(const EvalOptions& opt) {
  std::optional<pbell::MomentModel> model;
  auto need_model = [&]() -> const pbell::MomentModel& {
    if (!model) {
      if (opt.dist.empty()) throw CLI::ValidationError("missing required parameter --dist");
      model = pbell::MomentModel::parse(opt.dist);
    }
    return *model;
  };
  auto rat = [&](const std::optional<std::string>& s, const char* flag) {
    if (!s) throw CLI::ValidationError(std::string("missing required parameter ") + flag);
    return pbell::parse_rational(*s);
  };

  Rational value;
  if (opt.target == "stirling") {
    value = pbell::stirling2(require(opt.n, "--n"), require(opt.k, "--k"));
  } else if (opt.target == "r-stirling") {
    value = pbell::r_stirling2(require(opt.n, "--n"), require(opt.k, "--k"),
                               require(opt.r, "--r"));
  } else if (opt.target == "bell") {
    value = pbell::bell_poly(require(opt.n, "--n"), rat(opt.x, "--x"));
  } else if (opt.target == "r-bell") {
    value = pbell::r_bell_poly(require(opt.n, "--n"), require(opt.r, "--r"),
                               rat(opt.x, "--x"));
  } else if (opt.target == "prob-stirling") {
    value = pbell::prob_stirling2(need_model(), require(opt.n, "--n"), require(opt.k, "--k"));
  } else if (opt.target == "prob-r-stirling") {
    value = pbell::prob_r_stirling2(need_model(), require(opt.n, "--n"),
                                    require(opt.k, "--k"), require(opt.r, "--r"));
  } else if (opt.target == "prob-bell") {
    value = pbell::prob_bell_poly(need_model(), require(opt.n, "--n"), rat(opt.x, "--x"));
  } else if (opt.target == "prob-r-bell") {
    value = pbell::prob_r_bell_poly(need_model(), require(opt.n, "--n"),
                                    require(opt.r, "--r"), rat(opt.x, "--x"));
  } else if (opt.target == "spivey-rhs") {
    value = pbell::spivey_general_rhs(need_model(), rat(opt.y, "--y"), require(opt.r, "--r"),
                                      require(opt.n, "--n"), require(opt.j, "--j"));
  } else if (opt.target == "moment") {
    value = need_model().moment(require(opt.n, "--n"));
  } else if (opt.target == "sum-moment") {
    value = need_model().sum_moment(require(opt.k, "--k"), require(opt.n, "--n"));
  } else if (opt.target == "joint-moment") {
    if (!opt.ls) throw CLI::ValidationError("missing required parameter --ls");
    auto ls = parse_ls(*opt.ls);
    value = need_model().joint_moment(require(opt.p, "--p"), ls);
  } else {
    throw CLI::ValidationError("unknown eval target '" + opt.target + "'");
  }
  std::cout << pbell::to_string(value) << "\n";
  return 0;
}

bool starts_new_spec(const std::string& tok) {
  static const char* kinds[] = {"det:", "bernoulli:", "binomial:", "poisson:",
                                "geometric:", "finite:"};
  for (const char* k : kinds) {
    if (tok.rfind(k, 0) == 0) return true;
  }
  return false;
}

// binomial/finite specs contain commas themselves, so a comma only separates
// models when the next token begins a new kind.
std::vector<pbell::MomentModel> models_from_spec(const std::string& dists) {
  if (dists.empty()) return pbell::default_models();
  std::vector<pbell::MomentModel> models;
  std::string buffer;
  auto flush = [&]() {
    if (!buffer.empty()) {
      models.push_back(pbell::MomentModel::parse(buffer));
      buffer.clear();
    }
  };
  std::size_t start = 0;
  while (start <= dists.size()) {
    auto pos = dists.find(',', start);
    std::string tok = dists.substr(start, pos - start);
    if (buffer.empty() || starts_new_spec(tok)) {
      flush();
      buffer = tok;
    } else {
      buffer += "," + tok;
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  flush();
  return models;
}

int run_verify(const VerifyOptions& opt) {
  std::vector<pbell::IdentityId> ids;
  if (opt.ids.empty() || (opt.ids.size() == 1 && opt.ids[0] == "all")) {
    ids = pbell::all_identities();
  } else {
    for (const auto& name : opt.ids) {
      auto id = pbell::parse_identity(name);
      if (!id) {
        std::cerr << "verify: unknown identity '" << name << "'\n";
        return 2;
      }
      ids.push_back(*id);
    }
  }
  pbell::GridConfig grid;
  grid.max_sum = opt.max_sum;
  grid.max_r = opt.max_r;
  auto models = models_from_spec(opt.dists);

  long total_failures = 0;
  nlohmann::json jreports = nlohmann::json::array();
  if (opt.format == "csv") std::cout << "identity,cases,failures,status\n";
  for (auto id : ids) {
    auto report = pbell::verify(id, grid, models);
    total_failures += static_cast<long>(report.failures.size());
    if (opt.format == "json") {
      jreports.push_back(report.to_json());
    } else if (opt.format == "csv") {
      std::cout << report.identity << "," << report.cases_run << ","
                << report.failures.size() << "," << (report.passed() ? "pass" : "fail")
                << "\n";
    } else {
      std::cout << (report.passed() ? "PASS" : "FAIL") << " " << report.identity
                << " cases=" << report.cases_run
                << " failures=" << report.failures.size() << "\n";
      for (const auto& f : report.failures) {
        std::cout << "  " << f.params << " lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
      }
    }
  }
  if (opt.format == "json") std::cout << jreports << "\n";
  return total_failures == 0 ? 0 : 1;
}

int run_mc(const McOptions& opt) {
  auto model = pbell::MomentModel::parse(opt.dist);
  auto est = pbell::mc_check(model, opt.n, opt.k, opt.samples, opt.seed);
  if (opt.format == "json") {
    std::cout << est.to_json() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "target,samples,estimate,stderr,exact,z_score\n";
    std::cout << "\"" << est.target << "\"," << est.samples << "," << est.estimate << ","
              << est.stderr_ << "," << pbell::to_string(est.exact) << "," << est.z_score
              << "\n";
  } else {
    std::cout << est.target << "\n"
              << "samples=" << est.samples << " estimate=" << est.estimate
              << " stderr=" << est.stderr_ << " exact=" << pbell::to_string(est.exact)
              << " z=" << est.z_score << "\n";
  }
  return std::abs(est.z_score) <= opt.threshold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact probabilistic r-Stirling / r-Bell calculator and identity verifier"};
  app.require_subcommand(1);

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Print a number triangle or Bell-value column");
  table->add_option("kind", table_opt.kind, "stirling|r-stirling|prob-stirling|prob-r-stirling|bell|r-bell|prob-bell|prob-r-bell")
      ->required()
      ->check(CLI::IsMember({"stirling", "r-stirling", "prob-stirling", "prob-r-stirling",
                             "bell", "r-bell", "prob-bell", "prob-r-bell"}));
  table->add_option("--dist", table_opt.dist, "distribution spec (required for prob-* kinds)");
  table->add_option("--n-max", table_opt.n_max, "largest n")->required();
  table->add_option("--r", table_opt.r, "r parameter");
  table->add_option("--x", table_opt.x, "polynomial argument (rational)");
  table->add_option("--format", table_opt.format)->check(CLI::IsMember({"plain", "csv", "json"}));

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Evaluate a single quantity");
  eval->add_option("target", eval_opt.target, "what to evaluate")->required();
  eval->add_option("--dist", eval_opt.dist);
  eval->add_option("--n", eval_opt.n);
  eval->add_option("--k", eval_opt.k);
  eval->add_option("--r", eval_opt.r);
  eval->add_option("--j", eval_opt.j);
  eval->add_option("--p", eval_opt.p);
  eval->add_option("--x", eval_opt.x);
  eval->add_option("--y", eval_opt.y);
  eval->add_option("--ls", eval_opt.ls, "comma-separated positive exponents");

  VerifyOptions verify_opt;
  auto* ver = app.add_subcommand("verify", "Run identity suites over parameter grids");
  ver->add_option("ids", verify_opt.ids, "identity ids, or 'all'");
  ver->add_option("--max-sum", verify_opt.max_sum, "degree-sum ceiling");
  ver->add_option("--max-r", verify_opt.max_r, "r ceiling");
  ver->add_option("--dists", verify_opt.dists, "comma-separated model specs");
  ver->add_option("--format", verify_opt.format)->check(CLI::IsMember({"plain", "csv", "json"}));

  McOptions mc_opt;
  auto* mc = app.add_subcommand("mc", "Monte Carlo cross-check of E[S_k^n]");
  mc->add_option("--dist", mc_opt.dist)->required();
  mc->add_option("--n", mc_opt.n)->required();
  mc->add_option("--k", mc_opt.k)->required();
  mc->add_option("--samples", mc_opt.samples)->check(CLI::Range(100L, 1000000000L));
  mc->add_option("--seed", mc_opt.seed);
  mc->add_option("--threshold", mc_opt.threshold, "|z| acceptance band");
  mc->add_option("--format", mc_opt.format)->check(CLI::IsMember({"plain", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return run_table(table_opt);
    if (*eval) return run_eval(eval_opt);
    if (*ver) return run_verify(verify_opt);
    if (*mc) return run_mc(mc_opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
