#pragma once

#include <complex>

namespace polyzeta {

using Complex = std::complex<double>;

// First-order jet in the zeta argument s: a value together with its
// derivative d/ds. Constants lift with a zero derivative; arithmetic applies
// the product and chain rules.
struct Jet {
  Complex value{};
  Complex dvalue{};

  constexpr Jet() = default;
  constexpr Jet(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
  constexpr Jet(Complex v) : value(v) {}  // NOLINT(google-explicit-constructor)
  constexpr Jet(Complex v, Complex d) : value(v), dvalue(d) {}

  // The independent variable s itself, seeded at s0.
  static constexpr Jet variable(Complex s0) { return {s0, Complex(1.0)}; }

  Jet& operator+=(const Jet& o) {
    value += o.value;
    dvalue += o.dvalue;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value -= o.value;
    dvalue -= o.dvalue;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    dvalue = dvalue * o.value + value * o.dvalue;
    value *= o.value;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    const Complex q = value / o.value;
    dvalue = (dvalue - q * o.dvalue) / o.value;
    value = q;
    return *this;
  }
};

inline Jet operator-(const Jet& a) { return {-a.value, -a.dvalue}; }
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }

// Principal branch.
inline Jet log(const Jet& a) { return {std::log(a.value), a.dvalue / a.value}; }

inline Jet exp(const Jet& a) {
  const Complex e = std::exp(a.value);
  return {e, e * a.dvalue};
}

// base^exponent = exp(exponent * log(base)), principal log.
inline Jet pow(const Jet& base, const Jet& exponent) {
  return exp(exponent * log(base));
}

}  // namespace polyzeta
