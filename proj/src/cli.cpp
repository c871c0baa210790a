#include "polyzeta/cli.hpp"

#include "polyzeta/applications.hpp"
#include "polyzeta/continuation_oracle.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/zeta_at_zero.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace polyzeta::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kRootSumWarning = "zeta(0) root power sums carry the 1/deg(P) normalization";
constexpr const char* kOddWeightWarning = "odd-weight zeta(0) boundary constant uses zeta(2m+2)";

struct Settings {
  std::string format = "text";
  std::optional<double> tol;
  int hurwitz_k = HurwitzParams{}.head_terms;
  int hurwitz_j = HurwitzParams{}.tail_order;
  int oracle_k = OracleParams{}.head_count;
  int oracle_m = OracleParams{}.expansion_order;
  std::string poly;
  int p = 0;
  int m = 1;
  int n = 2;
  std::string degeneracy = "1";
  std::string model_path;
  bool mu_k_equal_n = false;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Json>> input;
  std::optional<Complex> zeta0;
  std::optional<Complex> zeta_prime0;
  std::optional<Complex> log_det;
  std::optional<Complex> det;
  std::optional<std::int64_t> shift_N;
  double err_estimate = 0.0;
  std::vector<std::string> warnings;
  std::optional<Json> oracle;  // oracle-check only
};

Report make_report(std::string command, std::vector<std::pair<std::string, Json>> input) {
  Report r;
  r.command = std::move(command);
  r.input = std::move(input);
  return r;
}

ZetaOptions zeta_options(const Settings& s) {
  ZetaOptions o;
  o.hurwitz.head_terms = s.hurwitz_k;
  o.hurwitz.tail_order = s.hurwitz_j;
  if (s.tol) o.hurwitz.target_tol = *s.tol;
  return o;
}

OracleParams oracle_params(const Settings& s) {
  OracleParams o;
  o.head_count = s.oracle_k;
  o.expansion_order = s.oracle_m;
  o.hurwitz.head_terms = s.hurwitz_k;
  o.hurwitz.tail_order = s.hurwitz_j;
  return o;
}

// Weights whose closed form is evaluated for Z^(p) with head shift N.
void add_closed_form_warnings(Report& r, int max_weight, std::int64_t shift, bool odd_direct) {
  const bool odd = odd_direct || (shift > 0 && max_weight >= 1);
  r.warnings.emplace_back(kRootSumWarning);
  if (odd) r.warnings.emplace_back(kOddWeightWarning);
}

void fill_determinant(Report& r, Complex zeta0, Complex zeta_prime0) {
  r.zeta0 = zeta0;
  r.zeta_prime0 = zeta_prime0;
  r.log_det = -zeta_prime0;
  r.det = std::exp(-zeta_prime0);
}

std::vector<Rational> parse_degeneracy(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report run_zeta(const std::string& command, const Settings& s) {
  Report r = make_report(command, {{"poly", s.poly}, {"p", s.p}});
  const Polynomial poly = parse_polynomial(s.poly);
  const ZetaResult z = zeta_shifted(poly, s.p, zeta_options(s));
  fill_determinant(r, z.zeta0, z.zeta_prime0);
  r.shift_N = z.shift_N;
  r.err_estimate = z.err_estimate;
  add_closed_form_warnings(r, s.p, z.shift_N, s.p % 2 == 1);
  return r;
}

Report run_det(const Settings& s) {
  Report r = make_report("det", {{"poly", s.poly}, {"degeneracy", s.degeneracy}});
  const Polynomial poly = parse_polynomial(s.poly);
  const auto c = parse_degeneracy(s.degeneracy);
  const Determinant d = log_det(poly, c, zeta_options(s));
  fill_determinant(r, d.zeta0, d.zeta_prime0);
  r.shift_N = d.shift_N;
  r.err_estimate = d.err_estimate;
  bool odd = false;
  for (std::size_t l = 1; l < c.size(); l += 2) odd = odd || c[l] != 0;
  add_closed_form_warnings(r, static_cast<int>(c.size()) - 1, d.shift_N, odd);
  return r;
}

Report run_multisum(const Settings& s) {
  Report r = make_report("multisum", {{"poly", s.poly}, {"m", s.m}});
  const Polynomial poly = parse_polynomial(s.poly);
  const auto c = composition_coeffs(s.m);
  const Determinant d = log_det(poly, c, zeta_options(s));
  fill_determinant(r, d.zeta0, d.zeta_prime0);
  r.shift_N = d.shift_N;
  r.err_estimate = d.err_estimate;
  add_closed_form_warnings(r, s.m - 1, d.shift_N, s.m >= 2);
  return r;
}

Report run_spectral(const Settings& s) {
  Report r = make_report("spectral", {{"model", s.model_path}});
  const SpectralModel model = parse_spectral_model(read_file(s.model_path));
  const SpectralZeta z = spectral_zeta(model, zeta_options(s));
  fill_determinant(r, z.zeta0, z.zeta_prime0);
  r.err_estimate = z.err_estimate;
  r.input.emplace_back("name", model.name);
  r.warnings.emplace_back(kRootSumWarning);
  return r;
}

Report run_hpn(const Settings& s) {
  Report r = make_report("hpn", {{"n", s.n}});
  const Complex det = hpn_closed_form(s.n);
  r.det = det;
  r.log_det = std::log(det);
  if ((s.n * (5 * s.n + 3)) % 8 != 0) {
    r.warnings.emplace_back("sign factor (-1)^(n(5n+3)/8) has a fractional exponent; taken as exp(i pi n(5n+3)/8)");
  }
  return r;
}

// Adding +0.0 folds -0.0 into 0.0.
Json complex_json(const std::optional<Complex>& z) {
  if (!z) return nullptr;
  return {{"re", z->real() + 0.0}, {"im", z->imag() + 0.0}};
}

Report run_oracle_check(const Settings& s) {
  Report r = make_report("oracle-check", {{"poly", s.poly}, {"p", s.p}});
  const Polynomial poly = parse_polynomial(s.poly);
  const double tol = s.tol.value_or(1e-6);
  ZetaOptions zopt = zeta_options(s);
  zopt.hurwitz.target_tol = HurwitzParams{}.target_tol;
  const ZetaResult closed = zeta_shifted(poly, s.p, zopt);
  const OracleResult oracle = oracle_zeta(poly, s.p, Jet::variable(0.0), oracle_params(s));

  fill_determinant(r, closed.zeta0, closed.zeta_prime0);
  r.shift_N = closed.shift_N;
  r.err_estimate = closed.err_estimate;
  add_closed_form_warnings(r, s.p, closed.shift_N, s.p % 2 == 1);

  const double d0 = std::abs(closed.zeta0 - oracle.value.value);
  const double d1 = std::abs(closed.zeta_prime0 - oracle.value.dvalue);
  Json o;
  o["zeta0"] = complex_json(oracle.value.value);
  o["zeta_prime0"] = complex_json(oracle.value.dvalue);
  o["diff_zeta0"] = d0;
  o["diff_zeta_prime0"] = d1;
  o["remainder_bound"] = oracle.remainder_bound;
  o["tol"] = tol;
  o["pass"] = d0 <= tol && d1 <= tol;
  r.oracle = std::move(o);
  return r;
}

std::string render_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  Json input = Json::object();
  for (const auto& [k, v] : r.input) input[k] = v;
  doc["input"] = std::move(input);
  doc["zeta0"] = complex_json(r.zeta0);
  doc["zeta_prime0"] = complex_json(r.zeta_prime0);
  doc["log_det"] = complex_json(r.log_det);
  doc["det"] = complex_json(r.det);
  doc["shift_N"] = r.shift_N ? Json(*r.shift_N) : Json(nullptr);
  doc["err_estimate"] = r.err_estimate;
  doc["warnings"] = r.warnings;
  if (r.oracle) doc["oracle"] = *r.oracle;
  return doc.dump(2) + "\n";
}

std::string format_complex(const std::optional<Complex>& z) {
  if (!z) return "n/a";
  const double im = z->imag();
  return format_real(z->real()) + (std::signbit(im) && im != 0.0 ? " - " : " + ") + format_real(std::abs(im)) + "i";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "input:";
  for (const auto& [k, v] : r.input) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  os << "\n";
  os << "zeta0: " << format_complex(r.zeta0) << "\n";
  os << "zeta_prime0: " << format_complex(r.zeta_prime0) << "\n";
  os << "log_det: " << format_complex(r.log_det) << "\n";
  os << "det: " << format_complex(r.det) << "\n";
  os << "shift_N: " << (r.shift_N ? std::to_string(*r.shift_N) : "n/a") << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r.err_estimate);
  os << "err_estimate: " << buf << "\n";
  if (r.oracle) {
    const Json& o = *r.oracle;
    os << "oracle_zeta0: "
       << format_complex(Complex(o["zeta0"]["re"].get<double>(), o["zeta0"]["im"].get<double>())) << "\n";
    os << "oracle_zeta_prime0: "
       << format_complex(Complex(o["zeta_prime0"]["re"].get<double>(), o["zeta_prime0"]["im"].get<double>()))
       << "\n";
    std::snprintf(buf, sizeof buf, "%.3e", o["diff_zeta0"].get<double>());
    os << "diff_zeta0: " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.3e", o["diff_zeta_prime0"].get<double>());
    os << "diff_zeta_prime0: " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.3e", o["tol"].get<double>());
    os << "tol: " << buf << "\n";
    os << "result: " << (o["pass"].get<bool>() ? "pass" : "fail") << "\n";
  }
  for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--tol", s.tol, "Hurwitz target tolerance (oracle-check: comparison tolerance)");
  cmd->add_option("--hurwitz-k", s.hurwitz_k, "Hurwitz head-term cap");
  cmd->add_option("--hurwitz-j", s.hurwitz_j, "Hurwitz Euler-Maclaurin corrections");
  cmd->add_option("--oracle-k", s.oracle_k, "Oracle exact head terms");
  cmd->add_option("--oracle-m", s.oracle_m, "Oracle tail expansion order");
}

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const double mag = std::abs(x);
  if (x == 0.0 || (mag >= 1e-4 && mag < 1e12)) {
    std::snprintf(buf, sizeof buf, "%.12f", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  }
  return buf;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta-regularized determinants of polynomial spectra", "polyzeta"};
  app.require_subcommand(1);
  Settings s;

  auto* zeta0 = app.add_subcommand("zeta0", "Z_P^(p)(0)");
  auto* zetaprime = app.add_subcommand("zetaprime", "d/ds Z_P^(p)(s) at s = 0");
  auto* det = app.add_subcommand("det", "Regularized determinant with polynomial degeneracy");
  auto* multisum = app.add_subcommand("multisum", "Multiple-sum zeta derivative at 0");
  auto* spectral = app.add_subcommand("spectral", "Determinant of a JSON spectral model");
  auto* hpn = app.add_subcommand("hpn", "Closed-form Dirac determinant on HP^n");
  auto* oracle = app.add_subcommand("oracle-check", "Compare closed forms with the continuation oracle");

  for (auto* cmd : {zeta0, zetaprime, det, multisum, spectral, hpn, oracle}) add_common(cmd, s);
  for (auto* cmd : {zeta0, zetaprime, det, multisum, oracle}) {
    cmd->add_option("--poly", s.poly, "Coefficients low to high, e.g. \"2,3,1\"")->required();
  }
  for (auto* cmd : {zeta0, zetaprime, oracle}) cmd->add_option("--p", s.p, "Weight p")->check(CLI::NonNegativeNumber);
  det->add_option("--degeneracy", s.degeneracy, "Degeneracy coefficients c_0,c_1,... (rationals)");
  multisum->add_option("--m", s.m, "Number of summed indices")->check(CLI::PositiveNumber);
  spectral->add_option("--model", s.model_path, "Spectral model JSON file")->required();
  hpn->add_option("--n", s.n, "Quaternionic dimension n >= 2");

  std::vector<std::string> argv_store{"polyzeta"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    Report report;
    if (zeta0->parsed()) {
      report = run_zeta("zeta0", s);
    } else if (zetaprime->parsed()) {
      report = run_zeta("zetaprime", s);
    } else if (det->parsed()) {
      report = run_det(s);
    } else if (multisum->parsed()) {
      report = run_multisum(s);
    } else if (spectral->parsed()) {
      report = run_spectral(s);
    } else if (hpn->parsed()) {
      report = run_hpn(s);
    } else {
      report = run_oracle_check(s);
    }
    out << (s.format == "json" ? render_json(report) : render_text(report));
    if (report.oracle && !(*report.oracle)["pass"].get<bool>()) return kExitAccuracy;
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const AccuracyError& e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", e.achieved_bound());
    err << "error: " << e.what() << " (achieved bound " << buf << ")\n";
    return kExitAccuracy;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace polyzeta::cli
