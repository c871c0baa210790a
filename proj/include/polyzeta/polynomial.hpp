#pragma once

#include "polyzeta/jet.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyzeta {

// P(x) = a_0 + a_1 x + ... + a_n x^n over complex coefficients, n >= 1 and
// a_n != 0. A nonzero a_0 is a spectrum requirement checked by
// validate_spectrum, not by construction.
class Polynomial {
 public:
  // Coefficients low to high. Throws PreconditionError on degree < 1 or a
  // vanishing leading coefficient.
  explicit Polynomial(std::vector<Complex> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Complex leading() const noexcept { return coeffs_.back(); }

  bool is_real() const noexcept;
  // max |a_i|, the scale used by tolerances.
  double scale() const noexcept;

  Polynomial scaled(Complex c) const;
  Polynomial derivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

// Horner evaluation.
Complex eval(const Polynomial& p, Complex z);
Jet eval(const Polynomial& p, const Jet& z);

struct Root {
  Complex value;
  int multiplicity = 1;
};

// Root multiset of a polynomial plus eagerly computed power sums
// p_j = sum_i m_i x_i^j, j = 0..max_power (p_0 = degree).
class RootSet {
 public:
  RootSet(std::vector<Root> roots, int max_power);

  const std::vector<Root>& roots() const noexcept { return roots_; }
  int degree() const noexcept { return degree_; }
  Complex power_sum(int j) const;
  int max_power() const noexcept { return static_cast<int>(power_sums_.size()) - 1; }
  double max_real_part() const noexcept;

  // Coefficients of prod (x - x_i)^(m_i), low to high.
  std::vector<Complex> monic_coeffs() const;

 private:
  std::vector<Root> roots_;
  int degree_ = 0;
  std::vector<Complex> power_sums_;
};

// Default power-sum cache depth for find_roots.
inline constexpr int kDefaultPowerSums = 16;

// Aberth-Ehrlich iteration from a perturbed circle, Newton polish, and
// clustering of near-coincident approximations into multiple roots.
// Real-coefficient input gets conjugate-symmetrized roots.
// Throws NumericError if the iteration cap is hit or a residual fails
// |P(x)| <= 1e-9 * ||P|| * max(1, |x|)^n.
RootSet find_roots(const Polynomial& p, int max_power = kDefaultPowerSums);

// p_j = sum_i x_i^j for j = 1..jmax via Newton's identities on the
// monic-normalized coefficients (index 0 of the result holds p_1).
std::vector<Complex> power_sums_from_coeffs(const Polynomial& p, int jmax);

struct SpectrumReport {
  bool valid = true;
  double max_real_part = 0.0;
  std::string message;  // names the offending root or integer when invalid

  // Throws SpectrumError carrying message when invalid.
  void require_valid() const;
};

// Root distance from N must exceed 1e-8 * (1 + |x|); a_0 must be nonzero and
// P(k) must not vanish for k = 0..kmax_check.
SpectrumReport validate_spectrum(const Polynomial& p, int kmax_check = 64);
SpectrumReport validate_spectrum(const Polynomial& p, const RootSet& roots, int kmax_check = 64);

// Coefficients of P(x + n).
Polynomial shift_polynomial(const Polynomial& p, std::int64_t n);

// Comma-separated coefficients low to high. Each entry is a real literal,
// "re+imi", "re-imi" or a pure imaginary "imi"; real parts may be rationals
// such as "3/4". Throws ParseError.
Polynomial parse_polynomial(std::string_view text);
Complex parse_complex(std::string_view text);

// "1,1" style rendering with %.17g components.
std::string to_string(const Polynomial& p);

}  // namespace polyzeta
