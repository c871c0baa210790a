#pragma once

// Operator spectra built from polynomial families: multiple-sum zeta
// functions, additive determinants over families, and the Dirac operator on
// quaternionic projective space HP^n.

#include "polyzeta/polynomial.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/zeta_at_zero.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyzeta {

inline constexpr int kMaxCompositionParts = 30;

// Coefficients c_0..c_{m-1} of d_k = C(k+m-1, m-1), the number of ordered
// ways to write k as a sum of m nonnegative integers, as a polynomial in k.
// Built by the prefix-sum recurrence d^(m)_k = sum_{l<=k} d^(m-1)_l.
std::vector<Rational> composition_coeffs(int m);

// d/ds at s = 0 of sum_k d^(m)_k P(k)^(-s).
Complex multiple_sum_zeta_prime0(const Polynomial& p, int m, const ZetaOptions& options = {});

struct SpectralFamily {
  std::string label;
  Polynomial eigen_poly;  // eigenvalue as a polynomial in the index
  // Degeneracy sum_l c_l m^l; nullopt marks a placeholder still to be supplied.
  std::optional<std::vector<Rational>> degeneracy;
  std::int64_t m_start = 0;  // first index included
};

struct SpectralModel {
  std::string name;
  std::vector<SpectralFamily> families;
};

struct SpectralZeta {
  Complex zeta0;
  Complex zeta_prime0;
  double err_estimate = 0.0;

  Complex log_det() const { return -zeta_prime0; }
};

// Degeneracy coefficients re-expanded in j = m - shift.
std::vector<Rational> reindex_degeneracy(const std::vector<Rational>& coeffs, std::int64_t shift);

// Throws SpectrumError / PreconditionError naming the family.
void validate_family(const SpectralFamily& family, std::size_t index);

// Sum over families of the degeneracy-weighted zeta data at s = 0.
SpectralZeta spectral_zeta(const SpectralModel& model, const ZetaOptions& options = {});

// -sum over families of sum_l c_l Z^(l)'(0) of the reindexed family.
Complex spectral_log_det(const SpectralModel& model, const ZetaOptions& options = {});

struct HpnOptions {
  // Adds the mu family with k = n, summed from m = 1.
  bool include_mu_k_equal_n = false;
};

// Eigenvalue families of the squared Dirac operator on HP^n, n >= 2:
//   lambda_{m,k} = 4m^2 + 4m(2n+k) + 4n(n+k) - 4(k+1)
//   mu_{m,k}     = lambda_{m,k+1} + 8(k+1)
// for k = 1..n-1. Degeneracies are left as placeholders.
SpectralModel hpn_spectrum(int n, const HpnOptions& options = {});

// exp(i pi n(5n+3)/8) * pi^(2n-1) / (2^(5n^2-2n-2) (n-2)! [(n-1)!(n+1)!]^(n-1) (2n)!)
//   * prod_{k=1}^{n-1} 1 / ((n+k-1)! (n+k+1)!)
// The sign factor (-1)^(n(5n+3)/8) is read as exp(i pi n(5n+3)/8).
Complex hpn_closed_form(int n);

// log det D = (1/2) zeta'_{D^2}(0) - (1/4) zeta_D(0) log(-1), log(-1) = i pi.
Complex dirac_half_spectrum_relation(Complex zeta_prime0_sq, Complex zeta0_d);

// Exact rational from "p/q", an integer or a finite decimal ("0.75", "-1.5e-2").
Rational parse_rational(std::string_view text);

// JSON schema:
//   {"name": str, "families": [{"eigen_coeffs": [[re, im] | number | str, ...],
//                               "degeneracy_coeffs": [number | "p/q", ...],
//                               "m_start": int, "label": str (optional)}]}
// A missing degeneracy_coeffs key leaves a placeholder. Throws ParseError.
SpectralModel parse_spectral_model(std::string_view json_text);
std::string spectral_model_to_json(const SpectralModel& model);

}  // namespace polyzeta
