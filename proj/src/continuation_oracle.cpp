#include "polyzeta/continuation_oracle.hpp"

#include "polyzeta/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace polyzeta {
namespace {

// c0 + c1 t + c2 t^2 with t = s - s0, truncated after t^2.
struct Taylor2 {
  Complex c0{}, c1{}, c2{};

  Taylor2& operator+=(const Taylor2& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
};

Taylor2 operator*(const Taylor2& a, const Taylor2& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

Taylor2 operator*(Complex k, const Taylor2& a) { return {k * a.c0, k * a.c1, k * a.c2}; }

// exp(-s log_value) around s0.
Taylor2 power_of(Complex log_value, Complex s0) {
  const Complex base = std::exp(-s0 * log_value);
  return {base, -log_value * base, 0.5 * log_value * log_value * base};
}

}  // namespace

OracleResult oracle_zeta(const Polynomial& p, int weight, const Jet& s, const OracleParams& params) {
  const int n = p.degree();
  if (n > kOracleMaxDegree || weight < 0 || weight > kOracleMaxWeight) {
    throw CapabilityError("oracle supports degree <= 3 and 0 <= p <= 2 (got degree " + std::to_string(n) +
                          ", p " + std::to_string(weight) + ")");
  }
  const int head_count = params.head_count;
  const int order = params.expansion_order;
  if (head_count < 4 * n || order < weight + 4) {
    throw PreconditionError("oracle params need head_count >= 4 * degree and expansion_order >= p + 4");
  }

  const RootSet roots = find_roots(p, order + 2);
  const SpectrumReport report = validate_spectrum(p, roots);
  report.require_valid();
  const std::int64_t shift =
      std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(report.max_real_part)) + 1);

  const Complex s0 = s.value;
  Taylor2 total;

  // Exact head k < N + K.
  const std::int64_t head_end = shift + head_count;
  for (std::int64_t k = 0; k < head_end; ++k) {
    const double kd = static_cast<double>(k);
    const double w = (k == 0 && weight == 0) ? 1.0 : std::pow(kd, weight);
    if (w == 0.0) continue;
    total += Complex(w) * power_of(std::log(eval(p, Complex(kd))), s0);
  }

  // Centered root moments q_j = sum_i m_i (x_i + g)^j.
  Complex centroid = 0.0;
  for (const Root& r : roots.roots()) centroid += static_cast<double>(r.multiplicity) * r.value;
  const Complex g = -centroid / static_cast<double>(n);
  std::vector<Complex> q(order + 3, 0.0);
  for (const Root& r : roots.roots()) {
    const Complex w = r.value + g;
    Complex power = 1.0;
    for (int j = 1; j <= order + 2; ++j) {
      power *= w;
      q[j] += static_cast<double>(r.multiplicity) * power;
    }
  }

  // exp(-s L(u)) = sum_j e_j(s) u^(-j); -s L(u) = sum_{j>=2} (s q_j / j) u^(-j).
  std::vector<Taylor2> c(order + 3);
  for (int j = 2; j <= order + 2; ++j) c[j] = {s0 * q[j] / static_cast<double>(j), q[j] / static_cast<double>(j), 0.0};
  std::vector<Taylor2> e(order + 3);
  e[0] = {1.0, 0.0, 0.0};
  for (int k = 1; k <= order + 2; ++k) {
    Taylor2 acc;
    for (int j = 1; j <= k; ++j) acc += Complex(static_cast<double>(j)) * (c[j] * e[k - j]);
    e[k] = Complex(1.0 / k) * acc;
  }

  const Complex tail_start = g + static_cast<double>(head_end);
  const Complex psi = digamma(tail_start);
  const double nd = n;

  // e_j(s) * zeta_H(tail_start, n s + j - l), through first order in t.
  auto tail_term = [&](const Taylor2& coeff, int j, int l) -> Taylor2 {
    const Complex sigma0 = nd * s0 + static_cast<double>(j - l);
    if (std::abs(sigma0 - 1.0) < 1e-12) {
      // zeta_H(a, 1 + n t) = 1/(n t) - psi(a) + O(t)
      if (std::abs(coeff.c0) > 1e-300) throw DomainError("oracle_zeta: s is a pole of the continuation");
      return {coeff.c1 / nd, coeff.c2 / nd - psi * coeff.c1, 0.0};
    }
    const auto h = hurwitz_zeta(Jet(tail_start), Jet(sigma0, nd), params.hurwitz);
    const Complex z0 = h.value.value;
    const Complex z1 = h.value.dvalue;
    return {coeff.c0 * z0, coeff.c1 * z0 + coeff.c0 * z1, 0.0};
  };

  Taylor2 tail;
  double remainder = 0.0;
  Complex minus_g_power = 1.0;  // (-g)^(p-l), built from l = p downward
  for (int l = weight; l >= 0; --l) {
    const Complex weight_coeff = binomial(weight, l) * minus_g_power;
    for (int j = 0; j <= order; ++j) {
      if (e[j].c0 == 0.0 && e[j].c1 == 0.0 && e[j].c2 == 0.0) continue;
      tail += weight_coeff * tail_term(e[j], j, l);
    }
    // Two orders, since centered odd moments vanish for symmetric root sets.
    for (int j = order + 1; j <= order + 2; ++j) {
      const Taylor2 omitted = weight_coeff * tail_term(e[j], j, l);
      remainder += std::abs(omitted.c0) + std::abs(omitted.c1);
    }
    minus_g_power *= -g;
  }

  const Taylor2 leading = power_of(std::log(p.leading()), s0);
  remainder *= 4.0 * (std::abs(leading.c0) + std::abs(leading.c1));
  total += leading * tail;

  if (remainder > kOracleMaxRemainder) {
    throw AccuracyError("oracle_zeta: expansion remainder " + std::to_string(remainder) + " exceeds 1e-8", remainder);
  }

  OracleResult result;
  result.value = params.jet_enabled ? Jet(total.c0, total.c1 * s.dvalue) : Jet(total.c0);
  result.remainder_bound = remainder;
  result.pre_shift = shift;
  return result;
}

Complex oracle_zeta_prime0(const Polynomial& p, int weight, const OracleParams& params) {
  OracleParams with_jet = params;
  with_jet.jet_enabled = true;
  return oracle_zeta(p, weight, Jet::variable(0.0), with_jet).value.dvalue;
}

}  // namespace polyzeta
