#include "polyzeta/polynomial.hpp"

#include "polyzeta/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

namespace polyzeta {
namespace {

constexpr int kAberthMaxIter = 500;

std::string format_complex(Complex z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

double one_norm(const Polynomial& p) {
  double s = 0.0;
  for (const Complex& c : p.coeffs()) s += std::abs(c);
  return s;
}

Complex eval_coeffs(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// k-th derivative coefficients.
std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c, int k) {
  std::vector<Complex> d = c;
  for (int step = 0; step < k && d.size() > 1; ++step) {
    std::vector<Complex> next(d.size() - 1);
    for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<double>(i);
    d = std::move(next);
  }
  return d;
}

// Fujiwara bound on the root moduli of a monic polynomial.
double fujiwara_radius(const std::vector<Complex>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  double r = 0.0;
  for (int k = 1; k <= n; ++k) {
    double mag = std::abs(monic[n - k]);
    if (k == n) mag *= 0.5;
    r = std::max(r, std::pow(mag, 1.0 / k));
  }
  return 2.0 * r;
}

std::vector<Complex> aberth(const std::vector<Complex>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  const std::vector<Complex> dmonic = derivative_coeffs(monic, 1);

  // Perturbed circle around the centroid, radius from the centered polynomial.
  const Complex center = -monic[n - 1] / static_cast<double>(n);
  std::vector<Complex> centered = monic;
  for (int k = 0; k < n; ++k) {
    for (int j = n - 1; j >= k; --j) centered[j] += center * centered[j + 1];
  }
  double radius = fujiwara_radius(centered);
  if (radius == 0.0) radius = 1e-3 * std::max(1.0, std::abs(center));

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = center + 0.5 * radius * std::polar(1.0, angle);
  }

  for (int iter = 0; iter < kAberthMaxIter; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex pz = eval_coeffs(monic, z[k]);
      if (pz == 0.0) continue;
      const Complex ratio = pz / eval_coeffs(dmonic, z[k]);
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (max_step < 1e-15) break;
  }
  return z;
}

// Merge approximations whose inclusion disks n|P(z)|/|prod (z - z_j)| overlap
// or which lie within 1e-7 * scale of each other.
std::vector<Root> cluster(const std::vector<Complex>& monic, const std::vector<Complex>& z) {
  const int n = static_cast<int>(z.size());
  double scale = 1.0;
  for (const Complex& x : z) scale = std::max(scale, std::abs(x));

  std::vector<double> radius(n);
  for (int i = 0; i < n; ++i) {
    Complex denom = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) denom *= z[i] - z[j];
    }
    const double num = n * std::abs(eval_coeffs(monic, z[i]));
    radius[i] = std::abs(denom) > 0.0 ? num / std::abs(denom) : INFINITY;
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = std::abs(z[i] - z[j]);
      if (gap < 1e-7 * scale || gap <= 2.0 * (radius[i] + radius[j])) parent[find(i)] = find(j);
    }
  }

  std::vector<Root> roots;
  std::vector<int> slot(n, -1);
  std::vector<Complex> sums;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(roots.size());
      roots.push_back({0.0, 0});
      sums.push_back(0.0);
    }
    roots[slot[r]].multiplicity += 1;
    sums[slot[r]] += z[i];
  }
  for (std::size_t k = 0; k < roots.size(); ++k) roots[k].value = sums[k] / static_cast<double>(roots[k].multiplicity);

  // A root of multiplicity m is a simple root of P^(m-1).
  for (Root& root : roots) {
    const auto f = derivative_coeffs(monic, root.multiplicity - 1);
    const auto df = derivative_coeffs(monic, root.multiplicity);
    for (int step = 0; step < 4; ++step) {
      const Complex fz = eval_coeffs(f, root.value);
      const Complex dfz = eval_coeffs(df, root.value);
      if (fz == 0.0 || dfz == 0.0) break;
      const Complex candidate = root.value - fz / dfz;
      if (std::abs(eval_coeffs(f, candidate)) >= std::abs(fz)) break;
      root.value = candidate;
    }
  }
  return roots;
}

void symmetrize_conjugates(std::vector<Root>& roots) {
  for (Root& r : roots) {
    if (std::abs(r.value.imag()) <= 1e-10 * std::max(1.0, std::abs(r.value))) r.value.imag(0.0);
  }
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i] || roots[i].value.imag() <= 0.0) continue;
    std::size_t best = roots.size();
    double best_gap = INFINITY;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j] || j == i || roots[j].value.imag() >= 0.0 ||
          roots[j].multiplicity != roots[i].multiplicity) {
        continue;
      }
      const double gap = std::abs(roots[j].value - std::conj(roots[i].value));
      if (gap < best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best == roots.size()) continue;
    const Complex avg = 0.5 * (roots[i].value + std::conj(roots[best].value));
    roots[i].value = avg;
    roots[best].value = std::conj(avg);
    used[i] = used[best] = true;
  }
}

double parse_real(std::string_view text) {
  auto parse_plain = [&](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const double den = parse_plain(text.substr(slash + 1));
  if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return parse_plain(text.substr(0, slash)) / den;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw PreconditionError("polynomial degree must be at least 1");
  if (coeffs_.back() == 0.0) throw PreconditionError("leading coefficient must be nonzero");
}

bool Polynomial::is_real() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c.imag() == 0.0; });
}

double Polynomial::scale() const noexcept {
  double s = 0.0;
  for (const Complex& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

Polynomial Polynomial::scaled(Complex c) const {
  std::vector<Complex> out = coeffs_;
  for (Complex& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const { return Polynomial(derivative_coeffs(coeffs_, 1)); }

Complex eval(const Polynomial& p, Complex z) { return eval_coeffs(p.coeffs(), z); }

Jet eval(const Polynomial& p, const Jet& z) {
  Jet acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Jet(*it);
  return acc;
}

RootSet::RootSet(std::vector<Root> roots, int max_power) : roots_(std::move(roots)) {
  for (const Root& r : roots_) {
    if (r.multiplicity < 1) throw PreconditionError("root multiplicity must be positive");
    degree_ += r.multiplicity;
  }
  power_sums_.assign(static_cast<std::size_t>(std::max(0, max_power)) + 1, 0.0);
  power_sums_[0] = static_cast<double>(degree_);
  for (const Root& r : roots_) {
    Complex power = 1.0;
    for (int j = 1; j <= max_power; ++j) {
      power *= r.value;
      power_sums_[j] += static_cast<double>(r.multiplicity) * power;
    }
  }
}

Complex RootSet::power_sum(int j) const {
  if (j < 0 || j > max_power()) {
    throw CapabilityError("power sum index " + std::to_string(j) + " outside the cached range");
  }
  return power_sums_[static_cast<std::size_t>(j)];
}

double RootSet::max_real_part() const noexcept {
  double m = -INFINITY;
  for (const Root& r : roots_) m = std::max(m, r.value.real());
  return m;
}

std::vector<Complex> RootSet::monic_coeffs() const {
  std::vector<Complex> c{1.0};
  for (const Root& r : roots_) {
    for (int k = 0; k < r.multiplicity; ++k) {
      std::vector<Complex> next(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r.value * c[i];
      }
      c = std::move(next);
    }
  }
  return c;
}

RootSet find_roots(const Polynomial& p, int max_power) {
  const int n = p.degree();
  std::vector<Complex> monic = p.coeffs();
  for (Complex& c : monic) c /= p.leading();

  std::vector<Root> roots;
  if (n == 1) {
    roots.push_back({-monic[0], 1});
  } else {
    roots = cluster(monic, aberth(monic));
  }
  if (p.is_real()) symmetrize_conjugates(roots);

  const double norm = one_norm(p);
  for (const Root& r : roots) {
    const double residual = std::abs(eval(p, r.value));
    const double allowed = 1e-9 * norm * std::pow(std::max(1.0, std::abs(r.value)), n);
    if (!(residual <= allowed)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "find_roots: no convergence, residual %.3e at root %s (allowed %.3e)",
                    residual, format_complex(r.value).c_str(), allowed);
      throw NumericError(buf);
    }
  }
  return RootSet(std::move(roots), max_power);
}

std::vector<Complex> power_sums_from_coeffs(const Polynomial& p, int jmax) {
  const int n = p.degree();
  std::vector<Complex> c = p.coeffs();
  for (Complex& x : c) x /= p.leading();

  // p_j + c_{n-1} p_{j-1} + ... + c_{n-j+1} p_1 + j c_{n-j} = 0 (j <= n),
  // p_j + c_{n-1} p_{j-1} + ... + c_0 p_{j-n} = 0 (j > n).
  std::vector<Complex> sums(static_cast<std::size_t>(std::max(0, jmax)) + 1, 0.0);
  for (int j = 1; j <= jmax; ++j) {
    Complex acc = 0.0;
    for (int i = 1; i < j && i <= n; ++i) acc += c[n - i] * sums[j - i];
    if (j <= n) acc += static_cast<double>(j) * c[n - j];
    sums[j] = -acc;
  }
  return {sums.begin() + 1, sums.end()};
}

void SpectrumReport::require_valid() const {
  if (!valid) throw SpectrumError(message);
}

SpectrumReport validate_spectrum(const Polynomial& p, int kmax_check) {
  if (p.coeff(0) == 0.0) {
    return {false, 0.0, "spectrum: a_0 = 0, root 0 is a nonnegative integer"};
  }
  return validate_spectrum(p, find_roots(p), kmax_check);
}

SpectrumReport validate_spectrum(const Polynomial& p, const RootSet& roots, int kmax_check) {
  SpectrumReport report;
  report.max_real_part = roots.max_real_part();
  if (p.coeff(0) == 0.0) {
    report.valid = false;
    report.message = "spectrum: a_0 = 0, root 0 is a nonnegative integer";
    return report;
  }
  for (const Root& r : roots.roots()) {
    const double k = std::round(r.value.real());
    if (k >= 0.0 && std::abs(r.value - Complex(k)) < 1e-8 * (1.0 + std::abs(r.value))) {
      report.valid = false;
      report.message = "spectrum: root " + format_complex(r.value) + " lies on the nonnegative integer " +
                       std::to_string(static_cast<long long>(k));
      return report;
    }
  }
  const double scale = p.scale();
  for (int k = 0; k <= kmax_check; ++k) {
    const double bound = 1e-12 * scale * std::pow(std::max(1.0, static_cast<double>(k)), p.degree());
    if (std::abs(eval(p, Complex(k))) <= bound) {
      report.valid = false;
      report.message = "spectrum: P(" + std::to_string(k) + ") vanishes";
      return report;
    }
  }
  return report;
}

Polynomial shift_polynomial(const Polynomial& p, std::int64_t n) {
  std::vector<Complex> b = p.coeffs();
  const int deg = p.degree();
  const double shift = static_cast<double>(n);
  for (int k = 0; k < deg; ++k) {
    for (int j = deg - 1; j >= k; --j) b[j] += shift * b[j + 1];
  }
  return Polynomial(std::move(b));
}

Complex parse_complex(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') t.push_back(ch);
  }
  if (t.empty()) throw ParseError("empty coefficient");
  if (t.back() != 'i') return {parse_real(t), 0.0};

  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

Polynomial parse_polynomial(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    coeffs.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() < 2) throw ParseError("polynomial needs at least two coefficients: '" + std::string(text) + "'");
  if (coeffs.back() == 0.0) throw ParseError("leading coefficient is zero in '" + std::string(text) + "'");
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& p) {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Complex c = p.coeffs()[i];
    if (c.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", c.real());
    } else {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
    }
    if (i) out += ',';
    out += buf;
  }
  return out;
}

}  // namespace polyzeta
