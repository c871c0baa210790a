#pragma once

// Closed-form values of the polynomial zeta function
//   Z_P^(p)(s) = sum_{k>=0} k^p / P(k)^s
// and of its s-derivative at s = 0, in terms of the roots x_i of P.
//
// With P = a_n prod (x - x_i), n = deg P and p_j = sum_i x_i^j:
//   p = 2m:    Z(0) = delta_{m,0}/2 + p_{2m+1} / (n (2m+1))
//   p = 2m+1:  Z(0) = p_{2m+2} / (n (2m+2)) - (-1)^m 2 (2m+1)! zeta(2m+2) / (2 pi)^(2m+2)
//   Z'(0) = -Z(0) log a_n - D_p + sum_i sum_l C(p,l) x_i^(p-l) zeta_H'(-x_i, -l)
// where D_p is log_factorization_defect. The unshifted forms require every
// Re x_i < 0; zeta_shifted lifts that by splitting off a finite head.

#include "polyzeta/polynomial.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/special_functions.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace polyzeta {

struct ZetaOptions {
  HurwitzParams hurwitz;
  int max_weight = 12;
};

struct ZetaResult {
  int p = 0;
  Complex zeta0;
  Complex zeta_prime0;
  Complex log_an_branch;  // principal log a_n used in the split
  std::int64_t shift_N = 0;
  double err_estimate = 0.0;
};

// Z_P^(p)(0) from Newton power sums. Throws SpectrumError for an invalid
// spectrum and PreconditionError when some Re x_i >= 0.
Complex zeta_p_at_zero(const Polynomial& p, int weight, const ZetaOptions& options = {});

// Value at s = 0 of the continued integral
//   int_0^inf x^p [ log P0(x) / P0(x)^s - sum_i log(x - x_i) / (x - x_i)^s ] dx
// for the monic P0 with the given roots:
//   -(1/2n) sum_{l=1}^p p_l p_{p+1-l} / (l (p+1-l)) + H_p / (p+1) p_{p+1}.
// Zero for p = 0 and for a single root.
Complex log_factorization_defect(const RootSet& roots, int weight);

// d/ds Z_P^(p)(s) at s = 0. Same preconditions as zeta_p_at_zero.
Complex zeta_p_prime_at_zero(const Polynomial& p, int weight, const ZetaOptions& options = {});

// Both values for any admissible spectrum. The head k < N is summed
// explicitly (k^p to Z(0), -k^p log P(k) to Z'(0)) and the rest evaluated on
// P(x + N) with N = max(0, floor(max Re x_i) + 1). forced_shift overrides N
// but must not be smaller than that minimum.
ZetaResult zeta_shifted(const Polynomial& p, int weight, const ZetaOptions& options = {},
                        std::optional<std::int64_t> forced_shift = std::nullopt);

struct Determinant {
  Complex log_det;      // -sum_l c_l Z^(l)'(0)
  Complex zeta0;        // sum_l c_l Z^(l)(0)
  Complex zeta_prime0;  // sum_l c_l Z^(l)'(0)
  std::int64_t shift_N = 0;
  double err_estimate = 0.0;

  Complex det() const { return std::exp(log_det); }
};

// Regularized determinant of the spectrum P(k) with degeneracy
// sum_l c_l k^l. An empty coefficient list is the zero degeneracy.
Determinant log_det(const Polynomial& p, std::span<const Rational> degeneracy,
                    const ZetaOptions& options = {});

}  // namespace polyzeta
