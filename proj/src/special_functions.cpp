#include "polyzeta/special_functions.hpp"

#include "polyzeta/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace polyzeta {
namespace {

constexpr double kPoleGuard = 1e-10;

// sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
std::vector<Rational> build_bernoulli_table() {
  std::vector<Rational> b(kBernoulliMax + 1);
  b[0] = 1;
  for (int m = 1; m <= kBernoulliMax; ++m) {
    if (m > 1 && m % 2 == 1) {
      b[m] = 0;
      continue;
    }
    Rational acc = 0;
    BigInt c = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += Rational(c) * b[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / Rational(m + 1);
  }
  return b;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = build_bernoulli_table();
  return table;
}

// B_{2j} / (2j)! as doubles, j = 0..kBernoulliMax/2.
const std::vector<double>& em_coefficients() {
  static const std::vector<double> coeffs = [] {
    std::vector<double> c(kBernoulliMax / 2 + 1);
    BigInt fact = 1;
    for (int j = 0; j <= kBernoulliMax / 2; ++j) {
      if (j > 0) fact *= BigInt(2 * j - 1) * (2 * j);
      c[j] = to_double(bernoulli_number(2 * j) / Rational(fact));
    }
    return c;
  }();
  return coeffs;
}

void check_pole(Complex z, const char* what) {
  const double re = z.real();
  if (re <= 0.5) {
    const double nearest = std::min(0.0, std::round(re));
    if (std::abs(z - Complex(nearest)) < kPoleGuard) {
      throw DomainError(std::string(what) + ": argument within 1e-10 of the pole at " +
                        std::to_string(static_cast<long long>(nearest)));
    }
  }
}

double jet_magnitude(const Jet& j) { return std::max(std::abs(j.value), std::abs(j.dvalue)); }

}  // namespace

const Rational& bernoulli_number(int j) {
  if (j < 0 || j > kBernoulliMax) {
    throw CapabilityError("bernoulli_number: index " + std::to_string(j) +
                          " outside table [0, " + std::to_string(kBernoulliMax) + "]");
  }
  return bernoulli_table()[j];
}

Complex bernoulli_poly(int j, Complex x) {
  if (j < 0 || j > kBernoulliMax) {
    throw CapabilityError("bernoulli_poly: index " + std::to_string(j) + " outside table");
  }
  // Horner in x over the coefficients C(j,m) B_m of x^(j-m).
  Complex acc = 0.0;
  for (int m = 0; m <= j; ++m) {
    acc = acc * x + binomial(j, m) * to_double(bernoulli_number(m));
  }
  return acc;
}

Rational harmonic_number(int p) {
  Rational h = 0;
  for (int i = 1; i <= p; ++i) h += Rational(1, i);
  return h;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

Complex log_gamma(Complex z) {
  check_pole(z, "log_gamma");
  Complex shift_logs = 0.0;
  while (z.real() < 10.0) {
    shift_logs += std::log(z);
    z += 1.0;
  }
  // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k / (2k (2k-1) z^(2k-1)).
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (int k = 1; k <= 12; ++k) {
    series += to_double(bernoulli_number(2 * k)) / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift_logs;
}

Complex digamma(Complex z) {
  check_pole(z, "digamma");
  Complex shift = 0.0;
  while (z.real() < 10.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const Complex inv2 = 1.0 / (z * z);
  Complex series = 0.0;
  Complex power = inv2;
  for (int k = 1; k <= 12; ++k) {
    series += to_double(bernoulli_number(2 * k)) / (2.0 * k) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

double riemann_zeta_int(int k) {
  if (k == 1) throw DomainError("riemann_zeta_int: pole at k = 1");
  if (k <= 0) {
    const int n = -k;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * to_double(bernoulli_number(n + 1) / Rational(n + 1));
  }
  if (k % 2 == 0) {
    // (2 pi)^k |B_k| / (2 k!)
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    const double bk = std::abs(to_double(bernoulli_number(k)));
    return std::pow(2.0 * std::numbers::pi, k) * bk / (2.0 * fact);
  }
  return hurwitz_zeta(Jet(1.0), Jet(static_cast<double>(k))).value.value.real();
}

HurwitzResult hurwitz_zeta(const Jet& a, const Jet& s, const HurwitzParams& params) {
  if (params.head_terms < 1 || params.tail_order < 1 || params.target_tol < 0.0) {
    throw PreconditionError("hurwitz_zeta: head_terms and tail_order must be >= 1, target_tol >= 0");
  }
  if (2 * params.tail_order + 2 > kBernoulliMax) {
    throw CapabilityError("hurwitz_zeta: tail_order " + std::to_string(params.tail_order) +
                          " exceeds the Bernoulli table");
  }
  check_pole(a.value, "hurwitz_zeta");
  if (std::abs(s.value - 1.0) < 1e-15) throw DomainError("hurwitz_zeta: pole at s = 1");

  const double re_a = a.value.real();
  const int shift = re_a >= 1.0 ? 0 : static_cast<int>(std::ceil(1.0 - re_a));
  const auto& coeff = em_coefficients();
  const int order = params.tail_order;

  // First omitted correction B_2(J+1)/(2J+2)! * (s)_(2J+1) * b^(-s-2J-1).
  auto omitted_term = [&](const Jet& b) {
    Jet rising = s;
    for (int i = 1; i <= 2 * order; ++i) rising = rising * (s + Jet(static_cast<double>(i)));
    return Jet(coeff[order + 1]) * rising * pow(b, -s - Jet(2.0 * order + 1.0));
  };

  // Smallest head (at most K past the shift) whose tail is already negligible;
  // short heads keep cancellation low when Re s < 0.
  int head = shift + 1;
  while (head < shift + params.head_terms &&
         jet_magnitude(omitted_term(a + Jet(static_cast<double>(head)))) > 1e-3 * params.target_tol) {
    ++head;
  }

  Jet sum;
  for (int k = 0; k < head; ++k) sum += pow(a + Jet(static_cast<double>(k)), -s);

  const Jet b = a + Jet(static_cast<double>(head));
  const Jet inv_b2 = Jet(1.0) / (b * b);
  sum += pow(b, Jet(1.0) - s) / (s - Jet(1.0));
  Jet power = pow(b, -s);
  sum += power * Jet(0.5);

  // Corrections B_2j/(2j)! * s(s+1)...(s+2j-2) * b^(-s-2j+1).
  Jet rising = s;
  power = power / b;
  for (int j = 1; j <= order; ++j) {
    sum += Jet(coeff[j]) * rising * power;
    rising = rising * (s + Jet(2.0 * j - 1.0)) * (s + Jet(2.0 * j));
    power = power * inv_b2;
  }
  const double bound = jet_magnitude(omitted_term(b));

  if (bound > params.target_tol * std::max(1.0, std::abs(sum.value))) {
    throw AccuracyError("hurwitz_zeta: truncation bound " + std::to_string(bound) +
                            " exceeds target tolerance",
                        bound);
  }
  return {sum, bound};
}

Complex hurwitz_zeta_sderiv(Complex a, int l, const HurwitzParams& params) {
  return hurwitz_zeta(Jet(a), Jet::variable(Complex(-l)), params).value.dvalue;
}

Jet generalized_hurwitz_p(Complex a, const Jet& s, int p, const HurwitzParams& params) {
  if (p < 0) throw PreconditionError("generalized_hurwitz_p: p must be nonnegative");
  Jet total;
  Complex minus_a_power = 1.0;  // (-a)^(p-l), built from l = p downward
  for (int l = p; l >= 0; --l) {
    const Jet term = hurwitz_zeta(Jet(a), s - Jet(static_cast<double>(l)), params).value;
    total += Jet(binomial(p, l) * minus_a_power) * term;
    minus_a_power *= -a;
  }
  return total;
}

}  // namespace polyzeta
