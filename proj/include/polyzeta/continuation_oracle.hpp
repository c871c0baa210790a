#pragma once

// Independent analytic continuation of Z_P^(p)(s) = sum_k k^p P(k)^(-s) for
// small degree and weight. Used to adjudicate the closed forms; it shares
// only the polynomial and special-function layers with them.
//
// Method: sum k < N + K exactly, where N moves every root into Re < 0. For
// the tail write P(k) = a_n u^n exp(L(u)) with u = k + g, g = -(1/n) sum x_i,
// L(u) = sum_i log(1 - w_i/u) = -sum_{j>=2} q_j / (j u^j), w_i = x_i + g.
// Expanding (u - g)^p exp(-s L(u)) to order M in 1/u turns every term into a
// Hurwitz zeta zeta_H(g + N + K, n s + j - l). Coefficients are carried as
// second-order Taylor series in s so the removable pole at n s + j - l = 1
// is resolved exactly at s = 0.

#include "polyzeta/polynomial.hpp"
#include "polyzeta/special_functions.hpp"

#include <cstdint>

namespace polyzeta {

struct OracleParams {
  int head_count = 16;       // K >= 4 * degree
  int expansion_order = 24;  // M >= p + 4
  bool jet_enabled = true;
  HurwitzParams hurwitz;
};

struct OracleResult {
  Jet value;
  double remainder_bound = 0.0;  // 4 x the next two omitted expansion orders
  std::int64_t pre_shift = 0;
};

inline constexpr int kOracleMaxDegree = 3;
inline constexpr int kOracleMaxWeight = 2;
inline constexpr double kOracleMaxRemainder = 1e-8;

// Throws CapabilityError outside degree <= 3, p <= 2; PreconditionError for
// undersized params; SpectrumError for invalid spectra; DomainError at a
// genuine pole in s; AccuracyError if the remainder exceeds 1e-8.
OracleResult oracle_zeta(const Polynomial& p, int weight, const Jet& s, const OracleParams& params = {});

// d/ds of oracle_zeta at s = 0.
Complex oracle_zeta_prime0(const Polynomial& p, int weight, const OracleParams& params = {});

}  // namespace polyzeta
