#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pbell/series.hpp"

using pbell::Rational;
using pbell::TruncatedSeries;

namespace {

TruncatedSeries make(std::initializer_list<Rational> cs) {
  return TruncatedSeries(std::vector<Rational>(cs));
}

// e^t - 1 truncated.
TruncatedSeries exp_minus_one(std::size_t order) {
  auto e = TruncatedSeries::exp_ct(Rational(1), order);
  return e.add(TruncatedSeries::constant(Rational(-1), order));
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> cs(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    cs[i] = Rational(num(rng), den(rng));
    cs[i].canonicalize();  // mpq arithmetic assumes canonical operands
  }
  if (zero_constant) cs[0] = 0;
  return TruncatedSeries(std::move(cs));
}

}  // namespace

TEST_CASE("series addition") {
  auto a = make({Rational(1), Rational(1)});
  auto b = make({Rational(1), Rational(-1)});
  CHECK(a.add(b) == make({Rational(2), Rational(0)}));

  auto z = TruncatedSeries::zero(1);
  CHECK(a.add(z) == a);

  auto c = make({Rational(1), Rational(1, 2)});
  auto d = make({Rational(1, 2), Rational(1)});
  CHECK(c.add(d) == make({Rational(3, 2), Rational(3, 2)}));
}

TEST_CASE("series multiplication") {
  auto one_plus_t = make({Rational(1), Rational(1), Rational(0)});
  CHECK(one_plus_t.multiply(one_plus_t) ==
        make({Rational(1), Rational(2), Rational(1)}));

  auto a = make({Rational(3), Rational(-2), Rational(5)});
  CHECK(a.multiply(TruncatedSeries::one(2)) == a);

  auto left = make({Rational(1), Rational(1), Rational(1, 2)});
  auto right = make({Rational(1), Rational(-1), Rational(0)});
  CHECK(left.multiply(right) == make({Rational(1), Rational(0), Rational(-1, 2)}));
}

TEST_CASE("mixed orders truncate to the minimum") {
  auto longer = make({Rational(1), Rational(2), Rational(3), Rational(4)});
  auto shorter = make({Rational(1), Rational(1)});
  CHECK(longer.add(shorter).order() == 1);
  CHECK(longer.multiply(shorter).order() == 1);
  CHECK(longer.multiply(shorter) == make({Rational(1), Rational(3)}));
}

TEST_CASE("series power") {
  auto a = make({Rational(7), Rational(-1), Rational(2)});
  CHECK(a.power(0) == TruncatedSeries::one(2));

  auto t = TruncatedSeries::variable(4);
  auto t3 = t.power(3);
  CHECK(t3.coeff(3) == 1);
  CHECK(t3.coeff(2) == 0);
  CHECK(t3.coeff(4) == 0);

  // (t + t^2/2 + t^3/6)^2 has t^3 coefficient 1.
  CHECK(exp_minus_one(3).power(2).coeff(3) == 1);
}

TEST_CASE("power equals iterated multiplication") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 8, false);
    auto iterated = TruncatedSeries::one(8);
    for (unsigned long k = 0; k <= 6; ++k) {
      CHECK(a.power(k) == iterated);
      iterated = iterated.multiply(a);
    }
  }
}

TEST_CASE("series exponential") {
  CHECK(TruncatedSeries::zero(4).exponential() == TruncatedSeries::one(4));

  auto et = TruncatedSeries::variable(3).exponential();
  CHECK(et == make({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));

  CHECK_THROWS_AS(TruncatedSeries::one(3).exponential(), std::invalid_argument);
}

TEST_CASE("exp(e^t - 1) produces the Bell numbers") {
  auto series = exp_minus_one(12).exponential();
  for (unsigned long n = 0; n <= 12; ++n) {
    CHECK(series.egf_coefficient(n) == Rational(pbell::oracles::bell_number(n)));
  }
}

TEST_CASE("egf coefficient extraction") {
  auto et = TruncatedSeries::exp_ct(Rational(1), 5);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(et.egf_coefficient(n) == 1);

  // (e^t-1)^2/2! at t^3 gives {3,2} = 3.
  auto squared = exp_minus_one(4).power(2);
  CHECK(squared.egf_coefficient(3) / 2 == 3);

  CHECK(TruncatedSeries::one(3).egf_coefficient(2) == 0);
  CHECK_THROWS_AS(TruncatedSeries::one(3).egf_coefficient(4), std::out_of_range);
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_series(rng, 12, false);
    auto b = random_series(rng, 12, false);
    auto c = random_series(rng, 12, false);
    CHECK(a.multiply(b) == b.multiply(a));
    CHECK(a.multiply(b).multiply(c) == a.multiply(b.multiply(c)));
  }
}

TEST_CASE("exponential is additive on zero-constant series") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 10, true);
    auto b = random_series(rng, 10, true);
    CHECK(a.add(b).exponential() == a.exponential().multiply(b.exponential()));
  }
}
