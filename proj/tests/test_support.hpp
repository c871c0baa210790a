#pragma once

// Shared helpers for the test suites: seeded random spectra and brute-force
// reference sums that never touch the closed-form or oracle code paths.

#include "polyzeta/polynomial.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace polyzeta::testing {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2Pi = 1.8378770664093454836;

// Literature values, confirmed against a 30-digit mpmath evaluation.
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921;
inline constexpr double kZetaPrimeMinus2 = -0.030448457058393270780;
inline constexpr double kGlaisherA = 1.2824271291006226368753425688697917;

// prod (x - r_i) scaled by lead, coefficients low to high.
inline Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  // Conjugate-pair products leave rounding noise in the imaginary parts.
  bool real = true;
  for (const Complex& r : roots) {
    bool paired = r.imag() == 0.0;
    for (const Complex& o : roots) paired = paired || o == std::conj(r);
    real = real && paired;
  }
  if (real && lead.imag() == 0.0) {
    for (Complex& x : c) x.imag(0.0);
  }
  return Polynomial(std::move(c));
}

// Roots with Re in [re_lo, re_hi], |Im| <= im_max, complex ones in conjugate pairs.
inline std::vector<Complex> random_left_roots(std::mt19937_64& rng, int degree, double re_lo = -4.0,
                                              double re_hi = -0.3, double im_max = 2.0) {
  std::uniform_real_distribution<double> re(re_lo, re_hi);
  std::uniform_real_distribution<double> im(0.2, im_max);
  std::bernoulli_distribution pair(0.5);
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < degree) {
    if (degree - static_cast<int>(roots.size()) >= 2 && pair(rng)) {
      const Complex z(re(rng), im(rng));
      roots.push_back(z);
      roots.push_back(std::conj(z));
    } else {
      roots.emplace_back(re(rng), 0.0);
    }
  }
  return roots;
}

// Composite Simpson on [a, b] with an even panel count.
template <class F>
Complex simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  Complex s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// sum_{k>=0} k^p P(k)^(-s) for Re s large enough: explicit terms below
// `terms`, then int_terms^inf f + f(terms)/2 - f'(terms)/12 with the integral
// mapped to (0, 1] by x = terms / t.
inline Complex brute_force_zeta(const Polynomial& poly, int p, Complex s, long terms) {
  auto f = [&](double x) -> Complex {
    const double w = (x == 0.0 && p == 0) ? 1.0 : std::pow(x, p);
    return w * std::exp(-s * std::log(eval(poly, Complex(x))));
  };
  Complex sum = 0.0;
  for (long k = terms - 1; k >= 0; --k) sum += f(static_cast<double>(k));
  const double x0 = static_cast<double>(terms);
  auto mapped = [&](double t) -> Complex {
    if (t == 0.0) return 0.0;
    return f(x0 / t) * x0 / (t * t);
  };
  const Complex integral = simpson(mapped, 0.0, 1.0, 4000);
  const double h = 1e-3 * x0;
  const Complex fprime = (f(x0 + h) - f(x0 - h)) / (2.0 * h);
  return sum + integral + 0.5 * f(x0) - fprime / 12.0;
}

}  // namespace polyzeta::testing
