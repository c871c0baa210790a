#include "polyzeta/zeta_at_zero.hpp"

#include "polyzeta/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace polyzeta {
namespace {

struct ZetaPair {
  Complex zeta0;
  Complex zeta_prime0;
  double err = 0.0;
};

void check_weight(int weight, const ZetaOptions& options) {
  if (weight < 0) throw PreconditionError("weight p must be nonnegative");
  if (weight > options.max_weight) {
    throw CapabilityError("weight p = " + std::to_string(weight) + " exceeds the cap " +
                          std::to_string(options.max_weight));
  }
}

void require_left_half_plane(const RootSet& roots) {
  for (const Root& r : roots.roots()) {
    if (r.value.real() >= 0.0) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "root %.12g%+.12gi has Re >= 0; use zeta_shifted", r.value.real(),
                    r.value.imag());
      throw PreconditionError(buf);
    }
  }
}

Complex clean(Complex z, bool real_input) {
  if (real_input && std::abs(z.imag()) <= 1e-10 * std::max(1.0, std::abs(z.real()))) z.imag(0.0);
  return z;
}

// Z(0) from power sums p_1..p_{weight+1} (index j-1 holds p_j).
Complex zeta0_from_power_sums(std::span<const Complex> sums, int degree, int weight) {
  const double n = degree;
  const Complex top = sums[static_cast<std::size_t>(weight)] / (n * (weight + 1));
  if (weight % 2 == 0) return (weight == 0 ? 0.5 : 0.0) + top;
  const int m = (weight - 1) / 2;
  double fact = 1.0;
  for (int i = 2; i <= 2 * m + 1; ++i) fact *= i;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double boundary = 2.0 * fact / std::pow(2.0 * std::numbers::pi, 2 * m + 2) * riemann_zeta_int(2 * m + 2);
  return top - sign * boundary;
}

// Unshifted closed forms; caller guarantees a valid spectrum with Re x_i < 0.
ZetaPair closed_forms(const Polynomial& p, const RootSet& roots, int weight, const ZetaOptions& options) {
  ZetaPair out;
  const auto sums = power_sums_from_coeffs(p, weight + 1);
  out.zeta0 = zeta0_from_power_sums(sums, p.degree(), weight);

  Complex hurwitz_part = 0.0;
  for (const Root& r : roots.roots()) {
    const Complex a = -r.value;
    Complex x_power = 1.0;  // x_i^(p-l), built from l = p downward
    for (int l = weight; l >= 0; --l) {
      const auto h = hurwitz_zeta(Jet(a), Jet::variable(Complex(-l)), options.hurwitz);
      const double w = r.multiplicity * binomial(weight, l);
      hurwitz_part += w * x_power * h.value.dvalue;
      out.err += w * std::abs(x_power) * h.error_bound;
      x_power *= r.value;
    }
  }
  out.zeta_prime0 = -out.zeta0 * std::log(p.leading()) - log_factorization_defect(roots, weight) + hurwitz_part;
  return out;
}

RootSet roots_for(const Polynomial& p, int weight) {
  return find_roots(p, std::max(weight + 1, kDefaultPowerSums));
}

RootSet shifted_roots(const RootSet& roots, std::int64_t n, int weight) {
  std::vector<Root> moved = roots.roots();
  for (Root& r : moved) r.value -= static_cast<double>(n);
  return RootSet(std::move(moved), std::max(weight + 1, kDefaultPowerSums));
}

}  // namespace

Complex log_factorization_defect(const RootSet& roots, int weight) {
  if (weight < 0) throw PreconditionError("weight p must be nonnegative");
  if (weight == 0) return 0.0;
  const double n = roots.degree();
  Complex cross = 0.0;
  for (int l = 1; l <= weight; ++l) {
    cross += roots.power_sum(l) * roots.power_sum(weight + 1 - l) / static_cast<double>(l * (weight + 1 - l));
  }
  const double harmonic = to_double(harmonic_number(weight));
  return -cross / (2.0 * n) + harmonic / (weight + 1) * roots.power_sum(weight + 1);
}

Complex zeta_p_at_zero(const Polynomial& p, int weight, const ZetaOptions& options) {
  check_weight(weight, options);
  const RootSet roots = roots_for(p, weight);
  validate_spectrum(p, roots).require_valid();
  require_left_half_plane(roots);
  const auto sums = power_sums_from_coeffs(p, weight + 1);
  return clean(zeta0_from_power_sums(sums, p.degree(), weight), p.is_real());
}

Complex zeta_p_prime_at_zero(const Polynomial& p, int weight, const ZetaOptions& options) {
  check_weight(weight, options);
  const RootSet roots = roots_for(p, weight);
  validate_spectrum(p, roots).require_valid();
  require_left_half_plane(roots);
  return clean(closed_forms(p, roots, weight, options).zeta_prime0, p.is_real());
}

ZetaResult zeta_shifted(const Polynomial& p, int weight, const ZetaOptions& options,
                        std::optional<std::int64_t> forced_shift) {
  check_weight(weight, options);
  const RootSet roots = roots_for(p, weight);
  const SpectrumReport report = validate_spectrum(p, roots);
  report.require_valid();

  const std::int64_t minimal =
      std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(report.max_real_part)) + 1);
  const std::int64_t shift = forced_shift.value_or(minimal);
  if (shift < minimal) {
    throw PreconditionError("forced shift " + std::to_string(shift) + " is below the minimum " +
                            std::to_string(minimal));
  }

  ZetaResult result;
  result.p = weight;
  result.shift_N = shift;
  result.log_an_branch = std::log(p.leading());

  for (std::int64_t k = 0; k < shift; ++k) {
    const double kp = (k == 0 && weight == 0) ? 1.0 : std::pow(static_cast<double>(k), weight);
    result.zeta0 += kp;
    result.zeta_prime0 -= kp * std::log(eval(p, Complex(static_cast<double>(k))));
  }

  const Polynomial moved = shift == 0 ? p : shift_polynomial(p, shift);
  const RootSet moved_roots = shift == 0 ? roots : shifted_roots(roots, shift, weight);
  const double n_shift = static_cast<double>(shift);
  for (int l = 0; l <= weight; ++l) {
    const double c = binomial(weight, l) * std::pow(n_shift, weight - l);
    if (c == 0.0) continue;
    const ZetaPair part = closed_forms(moved, moved_roots, l, options);
    result.zeta0 += c * part.zeta0;
    result.zeta_prime0 += c * part.zeta_prime0;
    result.err_estimate += c * part.err;
  }
  result.zeta0 = clean(result.zeta0, p.is_real());
  result.zeta_prime0 = clean(result.zeta_prime0, p.is_real());
  return result;
}

Determinant log_det(const Polynomial& p, std::span<const Rational> degeneracy, const ZetaOptions& options) {
  Determinant d;
  for (std::size_t l = 0; l < degeneracy.size(); ++l) {
    if (degeneracy[l] == 0) continue;
    const double c = to_double(degeneracy[l]);
    const ZetaResult r = zeta_shifted(p, static_cast<int>(l), options);
    d.zeta0 += c * r.zeta0;
    d.zeta_prime0 += c * r.zeta_prime0;
    d.err_estimate += std::abs(c) * r.err_estimate;
    d.shift_N = std::max(d.shift_N, r.shift_N);
  }
  d.log_det = -d.zeta_prime0;
  return d;
}

}  // namespace polyzeta
