#include <doctest.h>

#include "oracles.hpp"
#include "pbell/combinatorics.hpp"
#include "pbell/prob_bell.hpp"

using namespace pbell;

namespace {

const MomentModel& det1() {
  static const MomentModel m = MomentModel::deterministic(Rational(1));
  return m;
}

const MomentModel& bern_half() {
  static const MomentModel m = MomentModel::bernoulli(Rational(1, 2));
  return m;
}

}  // namespace

TEST_CASE("probabilistic Stirling numbers") {
  for (unsigned long n = 0; n <= 8; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      CHECK(prob_stirling2(det1(), n, k) == stirling2(n, k));
    }
  }
  CHECK(prob_stirling2(bern_half(), 3, 2) == Rational(3, 4));
  CHECK(prob_stirling2(MomentModel::deterministic(Rational(2)), 2, 1) == 4);
  CHECK(prob_stirling2(bern_half(), 2, 5) == 0);
}

TEST_CASE("probabilistic r-Stirling numbers") {
  CHECK(prob_r_stirling2(det1(), 2, 1, 1) == 3);
  CHECK(prob_r_stirling2(det1(), 2, 1, 1) == r_stirling2(2, 1, 1));
  CHECK(prob_r_stirling2(bern_half(), 2, 2, 1) == Rational(1, 4));
  for (unsigned long n = 0; n <= 8; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      CHECK(prob_r_stirling2(bern_half(), n, k, 0) == prob_stirling2(bern_half(), n, k));
    }
  }
}

TEST_CASE("moment-sum and generating-function routes agree") {
  for (const auto& spec : {"det:1", "bernoulli:1/2", "poisson:1"}) {
    auto model = MomentModel::parse(spec);
    for (unsigned long r = 0; r <= 2; ++r) {
      for (unsigned long n = 0; n <= 8; ++n) {
        for (unsigned long k = 0; k <= n + 1; ++k) {
          CHECK(prob_r_stirling2(model, n, k, r) == prob_r_stirling2_egf(model, n, k, r));
        }
      }
    }
  }
  CHECK(prob_r_stirling2_egf(MomentModel::parse("poisson:2/3"), 2, 5, 1) == 0);
}

TEST_CASE("probabilistic Bell polynomials") {
  for (unsigned long n = 0; n <= 10; ++n) {
    CHECK(prob_bell_poly(det1(), n, Rational(1)) == Rational(oracles::bell_number(n)));
  }
  // Bernoulli(p): phi_n^Y(x) = phi_n(p x).
  for (unsigned long n = 0; n <= 8; ++n) {
    for (const auto& x : {Rational(1), Rational(1, 2), Rational(-2)}) {
      CHECK(prob_bell_poly(bern_half(), n, x) == bell_poly(n, Rational(1, 2) * x));
    }
  }
  CHECK(prob_bell_poly(MomentModel::parse("geometric:1/2"), 0, Rational(9)) == 1);
}

TEST_CASE("probabilistic r-Bell polynomials") {
  CHECK(prob_r_bell_poly(det1(), 2, 1, Rational(1)) == 5);
  for (unsigned long n = 0; n <= 8; ++n) {
    CHECK(prob_r_bell_poly(bern_half(), n, 0, Rational(1, 2)) ==
          prob_bell_poly(bern_half(), n, Rational(1, 2)));
    for (unsigned long r = 0; r <= 3; ++r) {
      CHECK(prob_r_bell_poly(det1(), n, r, Rational(1, 2)) ==
            r_bell_poly(n, r, Rational(1, 2)));
    }
  }
}

TEST_CASE("partial-Bell route") {
  for (unsigned long n = 0; n <= 8; ++n) {
    for (unsigned long r = 0; r <= 2; ++r) {
      for (const auto& x : {Rational(1), Rational(1, 2), Rational(-1)}) {
        CHECK(prob_r_bell_via_partial_bell(bern_half(), n, r, x) ==
              prob_r_bell_poly(bern_half(), n, r, x));
      }
    }
  }
  CHECK(prob_r_bell_via_partial_bell(MomentModel::parse("poisson:2/3"), 0, 3,
                                     Rational(7)) == 1);
  CHECK(prob_r_bell_via_partial_bell(det1(), 2, 0, Rational(1)) == 2);
}

TEST_CASE("derivative recurrence") {
  CHECK(recurrence_step(det1(), 2, 0, Rational(1)) == 5);
  for (unsigned long n = 0; n <= 8; ++n) {
    CHECK(recurrence_step(bern_half(), n, 0, Rational(1, 2)) ==
          prob_bell_poly(bern_half(), n + 1, Rational(1, 2)));
  }
  CHECK(recurrence_step(bern_half(), 1, 1, Rational(1)) ==
        prob_r_bell_poly(bern_half(), 2, 1, Rational(1)));
}

TEST_CASE("generalized Spivey right-hand side") {
  for (unsigned long j = 0; j <= 6; ++j) {
    for (unsigned long r = 0; r <= 2; ++r) {
      for (const auto& y : {Rational(1), Rational(-1)}) {
        CHECK(spivey_general_rhs(bern_half(), y, r, 1, j) ==
              recurrence_step(bern_half(), j, r, y));
      }
    }
  }
  for (unsigned long n = 0; n <= 6; ++n) {
    for (unsigned long j = 0; n + j <= 6; ++j) {
      CHECK(spivey_general_rhs(det1(), Rational(1), 0, n, j) ==
            Rational(oracles::bell_number(n + j)));
    }
  }
  CHECK(spivey_general_rhs(bern_half(), Rational(1), 1, 2, 2) ==
        prob_r_bell_poly(bern_half(), 4, 1, Rational(1)));
}

TEST_CASE("Bell-number Spivey transcription") {
  for (unsigned long n = 0; n <= 6; ++n) {
    for (unsigned long l = 0; n + l <= 6; ++l) {
      CHECK(spivey_numbers_rhs(det1(), n, l) == Rational(oracles::bell_number(l + n)));
    }
  }
  for (unsigned long l = 0; l <= 6; ++l) {
    CHECK(spivey_numbers_rhs(bern_half(), 0, l) ==
          prob_bell_poly(bern_half(), l, Rational(1)));
  }
  CHECK(spivey_numbers_rhs(bern_half(), 2, 2) ==
        prob_bell_poly(bern_half(), 4, Rational(1)));
}

TEST_CASE("polynomial Spivey transcription") {
  for (unsigned long n = 0; n <= 5; ++n) {
    for (unsigned long l = 0; n + l <= 5; ++l) {
      CHECK(spivey_poly_rhs(bern_half(), Rational(1), n, l) ==
            spivey_numbers_rhs(bern_half(), n, l));
    }
  }
  CHECK(spivey_poly_rhs(det1(), Rational(1, 2), 2, 1) == Rational(11, 8));
  for (unsigned long l = 0; l <= 5; ++l) {
    CHECK(spivey_poly_rhs(bern_half(), Rational(1, 2), 0, l) ==
          prob_bell_poly(bern_half(), l, Rational(1, 2)));
  }
}

TEST_CASE("row sums give the r-Bell values") {
  for (const auto& spec : {"bernoulli:1/2", "poisson:2/3", "geometric:1/2"}) {
    auto model = MomentModel::parse(spec);
    for (unsigned long r = 0; r <= 2; ++r) {
      for (unsigned long n = 0; n <= 6; ++n) {
        Rational row(0);
        for (unsigned long k = 0; k <= n; ++k) row += prob_r_stirling2(model, n, k, r);
        CHECK(row == prob_r_bell_poly(model, n, r, Rational(1)));
      }
    }
  }
}
