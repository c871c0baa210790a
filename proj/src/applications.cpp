#include "polyzeta/applications.hpp"

#include "polyzeta/errors.hpp"
#include "polyzeta/special_functions.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>

namespace polyzeta {
namespace {

using Json = nlohmann::ordered_json;

BigInt binomial_exact(int n, int k) {
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Coefficients (in k) of sum_{l=0}^{k} l^r, with 0^0 = 1.
std::vector<Rational> prefix_power_sum(int r) {
  // sum_{l=1}^{k} l^r = 1/(r+1) sum_j C(r+1, j) B+_j k^(r+1-j), B+_1 = +1/2.
  std::vector<Rational> out(static_cast<std::size_t>(r) + 2, Rational(0));
  for (int j = 0; j <= r; ++j) {
    Rational b = bernoulli_number(j);
    if (j == 1) b = -b;
    out[r + 1 - j] += Rational(binomial_exact(r + 1, j)) * b / Rational(r + 1);
  }
  if (r == 0) out[0] += 1;
  return out;
}

double log_factorial(int n) {
  double s = 0.0;
  for (int i = 2; i <= n; ++i) s += std::log(static_cast<double>(i));
  return s;
}

Polynomial hpn_lambda(int n, int k) {
  const double b = 4.0 * (2 * n + k);
  const double c = 4.0 * n * (n + k) - 4.0 * (k + 1);
  return Polynomial({c, b, 4.0});
}

Polynomial hpn_mu(int n, int k) {
  std::vector<Complex> coeffs = hpn_lambda(n, k + 1).coeffs();
  coeffs[0] += 8.0 * (k + 1);
  return Polynomial(std::move(coeffs));
}

std::string family_name(const SpectralFamily& family, std::size_t index) {
  std::string name = "family #" + std::to_string(index);
  if (!family.label.empty()) name += " '" + family.label + "'";
  return name;
}

Complex json_complex(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError("coefficient must be a number, a string or an [re, im] pair: " + v.dump());
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) {
    // Exact value of the binary double.
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite degeneracy coefficient");
    int exponent = 0;
    const double mantissa = std::frexp(d, &exponent);
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    Rational r(scaled);
    const int shift = exponent - 53;
    if (shift >= 0) {
      r *= Rational(BigInt(1) << shift);
    } else {
      r /= Rational(BigInt(1) << -shift);
    }
    return r;
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("degeneracy coefficient must be a number or a rational string: " + v.dump());
}

}  // namespace

std::vector<Rational> composition_coeffs(int m) {
  if (m < 1) throw PreconditionError("composition_coeffs: m must be >= 1");
  if (m > kMaxCompositionParts) {
    throw CapabilityError("composition_coeffs: m = " + std::to_string(m) + " exceeds " +
                          std::to_string(kMaxCompositionParts));
  }
  std::vector<Rational> d{Rational(1)};
  for (int parts = 2; parts <= m; ++parts) {
    std::vector<Rational> next(d.size() + 1, Rational(0));
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (d[r] == 0) continue;
      const auto sums = prefix_power_sum(static_cast<int>(r));
      for (std::size_t j = 0; j < sums.size(); ++j) next[j] += d[r] * sums[j];
    }
    d = std::move(next);
  }
  return d;
}

Complex multiple_sum_zeta_prime0(const Polynomial& p, int m, const ZetaOptions& options) {
  const auto coeffs = composition_coeffs(m);
  Complex total = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l] == 0) continue;
    total += to_double(coeffs[l]) * zeta_shifted(p, static_cast<int>(l), options).zeta_prime0;
  }
  return total;
}

std::vector<Rational> reindex_degeneracy(const std::vector<Rational>& coeffs, std::int64_t shift) {
  std::vector<Rational> out(coeffs.size(), Rational(0));
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    BigInt shift_power = 1;
    for (std::size_t r = l + 1; r-- > 0;) {
      // c_l C(l, r) shift^(l-r) goes to j^r
      out[r] += coeffs[l] * Rational(binomial_exact(static_cast<int>(l), static_cast<int>(r)) * shift_power);
      shift_power *= shift;
    }
  }
  return out;
}

void validate_family(const SpectralFamily& family, std::size_t index) {
  if (family.m_start < 0) {
    throw PreconditionError(family_name(family, index) + ": m_start must be nonnegative");
  }
  if (!family.degeneracy) {
    throw PreconditionError(family_name(family, index) + ": degeneracy polynomial not supplied");
  }
  const Polynomial moved = shift_polynomial(family.eigen_poly, family.m_start);
  const SpectrumReport report = validate_spectrum(moved);
  if (!report.valid) throw SpectrumError(family_name(family, index) + ": " + report.message);

  const auto& c = *family.degeneracy;
  for (std::int64_t m = family.m_start; m < family.m_start + 100; ++m) {
    Rational value = 0;
    for (std::size_t l = c.size(); l-- > 0;) value = value * m + c[l];
    if (value < 0) {
      throw PreconditionError(family_name(family, index) + ": degeneracy is negative at m = " + std::to_string(m));
    }
  }
}

SpectralZeta spectral_zeta(const SpectralModel& model, const ZetaOptions& options) {
  if (model.families.empty()) throw PreconditionError("spectral model '" + model.name + "' has no families");
  SpectralZeta total;
  for (std::size_t i = 0; i < model.families.size(); ++i) {
    const SpectralFamily& family = model.families[i];
    validate_family(family, i);
    const Polynomial moved = shift_polynomial(family.eigen_poly, family.m_start);
    const auto degeneracy = reindex_degeneracy(*family.degeneracy, family.m_start);
    Determinant d;
    try {
      d = log_det(moved, degeneracy, options);
    } catch (const AccuracyError& e) {
      throw AccuracyError(family_name(family, i) + ": " + e.what(), e.achieved_bound());
    }
    total.zeta0 += d.zeta0;
    total.zeta_prime0 += d.zeta_prime0;
    total.err_estimate += d.err_estimate;
  }
  return total;
}

Complex spectral_log_det(const SpectralModel& model, const ZetaOptions& options) {
  return spectral_zeta(model, options).log_det();
}

SpectralModel hpn_spectrum(int n, const HpnOptions& options) {
  if (n < 2) throw PreconditionError("hpn_spectrum: n must be >= 2");
  SpectralModel model;
  model.name = "HP^" + std::to_string(n) + " squared Dirac";
  for (int k = 1; k <= n - 1; ++k) {
    model.families.push_back({"lambda k=" + std::to_string(k), hpn_lambda(n, k), std::nullopt, 0});
  }
  for (int k = 1; k <= n - 1; ++k) {
    model.families.push_back({"mu k=" + std::to_string(k), hpn_mu(n, k), std::nullopt, 0});
  }
  if (options.include_mu_k_equal_n) {
    model.families.push_back({"mu k=" + std::to_string(n), hpn_mu(n, n), std::nullopt, 1});
  }
  return model;
}

Complex hpn_closed_form(int n) {
  if (n < 2) throw PreconditionError("hpn_closed_form: n must be >= 2");
  double log_mag = (2.0 * n - 1.0) * std::log(std::numbers::pi);
  log_mag -= (5.0 * n * n - 2.0 * n - 2.0) * std::numbers::ln2;
  log_mag -= log_factorial(n - 2);
  log_mag -= (n - 1.0) * (log_factorial(n - 1) + log_factorial(n + 1));
  log_mag -= log_factorial(2 * n);
  for (int k = 1; k <= n - 1; ++k) log_mag -= log_factorial(n + k - 1) + log_factorial(n + k + 1);
  const double phase = std::numbers::pi * n * (5.0 * n + 3.0) / 8.0;
  return std::polar(std::exp(log_mag), phase);
}

Complex dirac_half_spectrum_relation(Complex zeta_prime0_sq, Complex zeta0_d) {
  const Complex log_minus_one(0.0, std::numbers::pi);
  return 0.5 * zeta_prime0_sq - 0.25 * zeta0_d * log_minus_one;
}

Rational parse_rational(std::string_view text) {
  const auto fail = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw fail();
    return parse_rational(text.substr(0, slash)) / den;
  }
  std::string_view t = text;
  bool negative = false;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  long long exponent = 0;
  const auto e_pos = t.find_first_of("eE");
  if (e_pos != std::string_view::npos) {
    const std::string exp_text(t.substr(e_pos + 1));
    try {
      std::size_t used = 0;
      exponent = std::stoll(exp_text, &used);
      if (used != exp_text.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    t = t.substr(0, e_pos);
  }
  std::string digits;
  bool seen_point = false;
  for (char ch : t) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) --exponent;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();
  // cpp_int reads a leading zero as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Rational value{BigInt(digits)};
  if (exponent > 0) value *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exponent)));
  return negative ? -value : value;
}

SpectralModel parse_spectral_model(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spectral model: ") + e.what());
  }
  try {
    SpectralModel model;
    model.name = doc.value("name", std::string());
    if (!doc.contains("families") || !doc["families"].is_array()) {
      throw ParseError("spectral model: 'families' array is required");
    }
    for (const Json& f : doc["families"]) {
      std::vector<Complex> coeffs;
      for (const Json& c : f.at("eigen_coeffs")) coeffs.push_back(json_complex(c));
      if (coeffs.size() < 2 || coeffs.back() == 0.0) {
        throw ParseError("spectral model: eigen_coeffs needs degree >= 1 with nonzero leading coefficient");
      }
      const auto m_start = f.value("m_start", std::int64_t{0});
      if (m_start < 0) throw ParseError("spectral model: m_start must be nonnegative");
      SpectralFamily family{f.value("label", std::string()), Polynomial(std::move(coeffs)), std::nullopt, m_start};
      if (f.contains("degeneracy_coeffs")) {
        std::vector<Rational> deg;
        for (const Json& c : f["degeneracy_coeffs"]) deg.push_back(json_rational(c));
        family.degeneracy = std::move(deg);
      }
      model.families.push_back(std::move(family));
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spectral model: ") + e.what());
  }
}

std::string spectral_model_to_json(const SpectralModel& model) {
  Json doc;
  doc["name"] = model.name;
  doc["families"] = Json::array();
  for (const SpectralFamily& f : model.families) {
    Json fam;
    if (!f.label.empty()) fam["label"] = f.label;
    fam["eigen_coeffs"] = Json::array();
    for (const Complex& c : f.eigen_poly.coeffs()) fam["eigen_coeffs"].push_back({c.real(), c.imag()});
    if (f.degeneracy) {
      fam["degeneracy_coeffs"] = Json::array();
      for (const Rational& c : *f.degeneracy) fam["degeneracy_coeffs"].push_back(to_string(c));
    }
    fam["m_start"] = f.m_start;
    doc["families"].push_back(std::move(fam));
  }
  return doc.dump(2);
}

}  // namespace polyzeta
