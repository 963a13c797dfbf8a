#include "pbell/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "pbell/combinatorics.hpp"

namespace pbell {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

MomentModel::MomentModel(DistKind kind, std::vector<Rational> params, std::string canonical_id)
    : kind_(kind), params_(std::move(params)), canonical_id_(std::move(canonical_id)) {}

MomentModel MomentModel::deterministic(const Rational& c) {
  return MomentModel(DistKind::deterministic, {c}, "det:" + to_string(c));
}

MomentModel MomentModel::bernoulli(const Rational& p) {
  if (p <= 0 || p > 1) throw std::invalid_argument("bernoulli: need 0 < p <= 1");
  return MomentModel(DistKind::bernoulli, {p}, "bernoulli:" + to_string(p));
}

MomentModel MomentModel::binomial(unsigned long m, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("binomial: need 0 <= p <= 1");
  return MomentModel(DistKind::binomial, {Rational(m), p},
                     "binomial:" + std::to_string(m) + "," + to_string(p));
}

MomentModel MomentModel::poisson(const Rational& lambda) {
  if (lambda < 0) throw std::invalid_argument("poisson: need lambda >= 0");
  return MomentModel(DistKind::poisson, {lambda}, "poisson:" + to_string(lambda));
}

MomentModel MomentModel::geometric(const Rational& p) {
  if (p <= 0 || p > 1) throw std::invalid_argument("geometric: need 0 < p <= 1");
  return MomentModel(DistKind::geometric, {p}, "geometric:" + to_string(p));
}

MomentModel MomentModel::finite_support(std::vector<std::pair<Rational, Rational>> atoms) {
  if (atoms.empty()) throw std::invalid_argument("finite_support: need at least one atom");
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge duplicate values so the canonical id is well defined.
  std::vector<std::pair<Rational, Rational>> merged;
  for (auto& [v, w] : atoms) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += w;
    } else {
      merged.emplace_back(v, w);
    }
  }
  Rational total(0);
  for (auto& [v, w] : merged) {
    if (w <= 0) throw std::invalid_argument("finite_support: weights must be positive");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("finite_support: weights must sum to 1");
  std::vector<Rational> params;
  std::string id = "finite";
  for (auto& [v, w] : merged) {
    params.push_back(v);
    params.push_back(w);
    id += (id == "finite" ? ":" : ",") + to_string(v) + ":" + to_string(w);
  }
  return MomentModel(DistKind::finite_support, std::move(params), std::move(id));
}

MomentModel MomentModel::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("bad distribution spec: '" + std::string(spec) + "'");
  }
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (head == "det") return deterministic(parse_rational(rest));
  if (head == "bernoulli") return bernoulli(parse_rational(rest));
  if (head == "poisson") return poisson(parse_rational(rest));
  if (head == "geometric") return geometric(parse_rational(rest));
  if (head == "binomial") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) {
      throw std::invalid_argument("binomial spec needs '<int>,<q>': '" + std::string(spec) + "'");
    }
    Rational m = parse_rational(parts[0]);
    if (m.get_den() != 1 || m < 0) {
      throw std::invalid_argument("binomial count must be a nonnegative integer: '" +
                                  std::string(parts[0]) + "'");
    }
    return binomial(m.get_num().get_ui(), parse_rational(parts[1]));
  }
  if (head == "finite") {
    std::vector<std::pair<Rational, Rational>> atoms;
    for (auto pair_text : split(rest, ',')) {
      auto sep = pair_text.find(':');
      if (sep == std::string_view::npos) {
        throw std::invalid_argument("finite spec needs '<v>:<w>' pairs: '" +
                                    std::string(pair_text) + "'");
      }
      atoms.emplace_back(parse_rational(pair_text.substr(0, sep)),
                         parse_rational(pair_text.substr(sep + 1)));
    }
    return finite_support(std::move(atoms));
  }
  throw std::invalid_argument("unknown distribution kind: '" + std::string(head) + "'");
}

Rational MomentModel::factorial_moment(unsigned long k) const {
  if (k == 0) return Rational(1);
  switch (kind_) {
    case DistKind::bernoulli:
      return k == 1 ? params_[0] : Rational(0);
    case DistKind::binomial:
      return falling_factorial(params_[0], k) * rational_pow(params_[1], k);
    case DistKind::poisson:
      return rational_pow(params_[0], k);
    case DistKind::geometric: {
      // Support {1,2,...}: E[(Y)_k] = k! (1-p)^{k-1} / p^k.
      const Rational& p = params_[0];
      return Rational(factorial(k)) * rational_pow(1 - p, k - 1) / rational_pow(p, k);
    }
    default:
      throw std::logic_error("factorial_moment: kind has no factorial-moment form");
  }
}

Rational MomentModel::moment(unsigned long n) const {
  static std::map<std::pair<std::string, unsigned long>, Rational> memo;
  static std::mutex mu;
  if (n == 0) return Rational(1);
  {
    std::lock_guard lock(mu);
    auto it = memo.find({canonical_id_, n});
    if (it != memo.end()) return it->second;
  }
  Rational value(0);
  switch (kind_) {
    case DistKind::deterministic:
      value = rational_pow(params_[0], n);
      break;
    case DistKind::finite_support:
      for (std::size_t i = 0; i + 1 < params_.size(); i += 2) {
        value += params_[i + 1] * rational_pow(params_[i], n);
      }
      break;
    default:
      // E[Y^n] = sum_k {n,k} E[(Y)_k].
      for (unsigned long k = 0; k <= n; ++k) {
        value += stirling2(n, k) * factorial_moment(k);
      }
      break;
  }
  std::lock_guard lock(mu);
  memo.emplace(std::make_pair(canonical_id_, n), value);
  return value;
}

TruncatedSeries MomentModel::mgf_series(std::size_t order) const {
  std::vector<Rational> cs(order + 1);
  for (std::size_t n = 0; n <= order; ++n) cs[n] = moment(n) / Rational(factorial(n));
  return TruncatedSeries(std::move(cs));
}

Rational MomentModel::sum_moment(unsigned long k, unsigned long n) const {
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  return mgf_series(n + 2).power(k).egf_coefficient(n);
}

Rational MomentModel::joint_moment(unsigned long p, std::span<const unsigned long> ls) const {
  for (auto l : ls) {
    if (l == 0) throw std::invalid_argument("joint_moment: exponents l_i must be positive");
  }
  unsigned long k = ls.size();
  if (k == 0) return p == 0 ? Rational(1) : Rational(0);
  Rational sum(0);
  for_each_weak_composition(p, k, [&](std::span<const unsigned long> parts) {
    Rational term = multinomial(p, parts);
    for (unsigned long i = 0; i < k; ++i) term *= moment(parts[i] + ls[i]);
    sum += term;
  });
  return sum;
}

Rational MomentModel::joint_moment_series(unsigned long p,
                                          std::span<const unsigned long> ls) const {
  for (auto l : ls) {
    if (l == 0) throw std::invalid_argument("joint_moment_series: exponents must be positive");
  }
  std::size_t order = p + 2;
  TruncatedSeries product = TruncatedSeries::one(order);
  for (auto l : ls) {
    std::vector<Rational> cs(order + 1);
    for (std::size_t j = 0; j <= order; ++j) cs[j] = moment(j + l) / Rational(factorial(j));
    product = product.multiply(TruncatedSeries(std::move(cs)));
  }
  return product.egf_coefficient(p);
}

Sampler::Sampler(MomentModel model, std::uint64_t seed)
    : model_(std::move(model)), rng_(seed) {}

double Sampler::uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double Sampler::sample() {
  const auto& params = model_.params_;
  switch (model_.kind_) {
    case DistKind::deterministic:
      return params[0].get_d();
    case DistKind::bernoulli:
      return uniform() < params[0].get_d() ? 1.0 : 0.0;
    case DistKind::binomial: {
      unsigned long m = params[0].get_num().get_ui();
      double p = params[1].get_d();
      double count = 0.0;
      for (unsigned long i = 0; i < m; ++i) count += uniform() < p ? 1.0 : 0.0;
      return count;
    }
    case DistKind::poisson: {
      double threshold = std::exp(-params[0].get_d());
      double prod = 1.0;
      long k = -1;
      do {
        ++k;
        prod *= uniform();
      } while (prod > threshold);
      return static_cast<double>(k);
    }
    case DistKind::geometric: {
      double p = params[0].get_d();
      if (p >= 1.0) return 1.0;
      double u = uniform();
      return std::floor(std::log1p(-u) / std::log1p(-p)) + 1.0;
    }
    case DistKind::finite_support: {
      double u = uniform();
      double cdf = 0.0;
      for (std::size_t i = 0; i + 1 < params.size(); i += 2) {
        cdf += params[i + 1].get_d();
        if (u < cdf) return params[i].get_d();
      }
      return params[params.size() - 2].get_d();
    }
  }
  throw std::logic_error("sample: unreachable kind");
}

}  // namespace pbell
