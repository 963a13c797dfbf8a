"""Exact probabilistic r-Stirling / r-Bell computations."""

from ._core import (
    MomentModel,
    bell_poly,
    identities,
    mc_check,
    partial_bell,
    prob_bell_poly,
    prob_r_bell_poly,
    prob_r_stirling2,
    prob_r_stirling2_egf,
    prob_stirling2,
    r_bell_poly,
    r_stirling2,
    recurrence_step,
    spivey_general_rhs,
    stirling2,
    verify,
)

__all__ = [
    "MomentModel",
    "bell_poly",
    "identities",
    "mc_check",
    "partial_bell",
    "prob_bell_poly",
    "prob_r_bell_poly",
    "prob_r_stirling2",
    "prob_r_stirling2_egf",
    "prob_stirling2",
    "r_bell_poly",
    "r_stirling2",
    "recurrence_step",
    "spivey_general_rhs",
    "stirling2",
    "verify",
]
