#pragma once

// Scalar building blocks: Bernoulli numbers and polynomials, harmonic
// numbers, complex log-Gamma and digamma, Riemann zeta at integers and the
// Hurwitz zeta function with first-order s-derivatives carried by Jet.

#include "polyzeta/jet.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

// Largest index served by the exact Bernoulli table.
inline constexpr int kBernoulliMax = 100;

// B_j as an exact rational, B_1 = -1/2. Throws CapabilityError past the table.
const Rational& bernoulli_number(int j);

// B_j(x) = sum_m C(j,m) B_m x^(j-m).
Complex bernoulli_poly(int j, Complex x);

// H_p = 1 + 1/2 + ... + 1/p, H_0 = 0.
Rational harmonic_number(int p);

// Principal branch of log Gamma(z): the continuation of the real function to
// C minus the nonpositive axis, built as Stirling at Re z >= 10 minus the
// principal logs picked up by log Gamma(z) = log Gamma(z+1) - log z.
// Throws DomainError within 1e-10 of a pole.
Complex log_gamma(Complex z);

// psi(z) = d/dz log Gamma(z). Same pole guard as log_gamma.
Complex digamma(Complex z);

// Riemann zeta at an integer k != 1. Even positive and nonpositive k use the
// Bernoulli closed forms; odd k >= 3 falls back to hurwitz_zeta(1, k).
double riemann_zeta_int(int k);

struct HurwitzParams {
  int head_terms = 30;        // K: cap on explicit terms after the Re a >= 1 shift
  int tail_order = 15;        // J: Euler-Maclaurin corrections
  double target_tol = 1e-11;  // bound must satisfy err <= tol * max(1, |value|)
};

struct HurwitzResult {
  Jet value;
  double error_bound = 0.0;  // magnitude of the first omitted correction
};

// zeta_H(a, s) = sum_{k>=0} (k+a)^(-s), continued in s. Both arguments may
// carry derivatives in s. Arguments with Re a < 1 are moved right by an integer
// shift whose terms are summed with principal powers, so any a off the
// nonpositive integers is accepted.
// Throws DomainError at a pole, AccuracyError if the bound misses target_tol.
HurwitzResult hurwitz_zeta(const Jet& a, const Jet& s, const HurwitzParams& params = {});

// d/ds zeta_H(a, s) at s = -l.
Complex hurwitz_zeta_sderiv(Complex a, int l, const HurwitzParams& params = {});

// zeta_H^(p)(a, s) = sum_k k^p (k+a)^(-s) = sum_l C(p,l) (-a)^(p-l) zeta_H(a, s-l).
Jet generalized_hurwitz_p(Complex a, const Jet& s, int p, const HurwitzParams& params = {});

// Binomial coefficient as a double; exact for the small arguments used here.
double binomial(int n, int k);

}  // namespace polyzeta
