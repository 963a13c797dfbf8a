"""Smoke tests for the python bindings."""

from fractions import Fraction

import pbell


def test_classical_values():
    assert pbell.stirling2(4, 2) == 7
    assert pbell.r_stirling2(2, 1, 1) == 3
    assert pbell.bell_poly(3, 1) == 5
    assert pbell.bell_poly(3, Fraction(1, 2)) == Fraction(11, 8)
    assert pbell.r_bell_poly(2, 1, 1) == 5


def test_moment_model():
    model = pbell.MomentModel.parse("bernoulli:1/2")
    assert model.canonical_id == "bernoulli:1/2"
    assert model.moment(5) == Fraction(1, 2)
    assert model.sum_moment(2, 2) == Fraction(3, 2)
    assert model.joint_moment(1, [1, 1]) == Fraction(1, 2)


def test_probabilistic_routes_agree():
    model = pbell.MomentModel.parse("poisson:2/3")
    for n in range(6):
        for k in range(n + 1):
            assert pbell.prob_r_stirling2(model, n, k, 2) == pbell.prob_r_stirling2_egf(
                model, n, k, 2
            )


def test_spivey_relation():
    model = pbell.MomentModel.parse("bernoulli:1/2")
    lhs = pbell.prob_r_bell_poly(model, 4, 1, 1)
    rhs = pbell.spivey_general_rhs(model, 1, 1, 2, 2)
    assert lhs == rhs


def test_verify_and_mc():
    report = pbell.verify("EQ9", max_sum=8)
    assert report["passed"]
    assert report["cases"] == 45

    est = pbell.mc_check("det:1", 3, 2, samples=1000, seed=7)
    assert est["estimate"] == 8.0
    assert est["z_score"] == 0.0
