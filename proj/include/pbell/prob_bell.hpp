#pragma once

#include "pbell/moments.hpp"
#include "pbell/rational.hpp"

namespace pbell {

// Probabilistic Stirling numbers of the second kind {n,k}_Y, via the
// alternating moment sum over E[S_l^n]. Zero for k > n.
Rational prob_stirling2(const MomentModel& model, unsigned long n, unsigned long k);

// Probabilistic r-Stirling numbers {n+r,k+r}_{r,Y}, moment-sum route.
Rational prob_r_stirling2(const MomentModel& model, unsigned long n, unsigned long k,
                          unsigned long r);

// Independent generating-function route: EGF coefficient of
// (E[e^{tY}]-1)^k e^{rt} / k! at t^n/n!.
Rational prob_r_stirling2_egf(const MomentModel& model, unsigned long n, unsigned long k,
                              unsigned long r);

// phi_n^Y(x) = sum_k {n,k}_Y x^k.
Rational prob_bell_poly(const MomentModel& model, unsigned long n, const Rational& x);

// phi_{n,r}^Y(x) = sum_k {n+r,k+r}_{r,Y} x^k.
Rational prob_r_bell_poly(const MomentModel& model, unsigned long n, unsigned long r,
                          const Rational& x);

// phi_{n,r}^Y(x) through partial Bell polynomials in the scaled moments
// x E[Y], x E[Y^2], ...
Rational prob_r_bell_via_partial_bell(const MomentModel& model, unsigned long n,
                                      unsigned long r, const Rational& x);

// One step of the derivative recurrence; equals phi_{n+1,r}^Y(x).
Rational recurrence_step(const MomentModel& model, unsigned long n, unsigned long r,
                         const Rational& x);

// Right-hand side of the generalized Spivey relation; equals
// phi_{j+n,r}^Y(y).
Rational spivey_general_rhs(const MomentModel& model, const Rational& y, unsigned long r,
                            unsigned long n, unsigned long j);

// Literal transcription of the probabilistic Bell-number Spivey relation;
// equals phi_{l+n}^Y = prob_bell_poly(model, l+n, 1).
Rational spivey_numbers_rhs(const MomentModel& model, unsigned long n, unsigned long l);

// Literal transcription of the polynomial version; equals
// prob_bell_poly(model, l+n, y).
Rational spivey_poly_rhs(const MomentModel& model, const Rational& y, unsigned long n,
                         unsigned long l);

}  // namespace pbell
