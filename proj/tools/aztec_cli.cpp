#include "aztec/asymptotics.hpp"
#include "aztec/closed_forms.hpp"
#include "aztec/equilibrium.hpp"
#include "aztec/oracle.hpp"
#include "aztec/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace aztec;

enum Exit { ok = 0, invariant_failure = 1, unsupported = 2, nonconvergence = 3 };

struct ConfigArgs {
  int n = 1;
  std::vector<int> holes, seps;
  std::optional<int> width_extra;
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "half height: the rectangle is AR_{2n,2n+k-l}");
    app->add_option("--holes", holes, "hole labels on the axis")->delimiter(',');
    app->add_option("--seps", seps, "separation labels on the axis")->delimiter(',');
    app->add_option("--width-extra", width_extra, "expected k-l (checked)");
    app->add_option("--config", file, "JSON config {n, holes, seps}");
  }
  DefectConfig build() const {
    DefectConfig c;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      c = nlohmann::json::parse(in).get<DefectConfig>();
    } else {
      c = make_config(n, holes, seps);
    }
    if (width_extra && *width_extra != c.k() - c.l())
      throw std::invalid_argument("--width-extra must equal the number of holes minus separations");
    return c;
  }
};

std::string fixed(long double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

int cmd_count(const ConfigArgs& a) {
  const auto c = a.build();
  const auto e = count_exact(c);
  std::cout << e.value.str() << "\npath: " << path_name(e.path) << "\n";
  return ok;
}

int cmd_corr(const ConfigArgs& a, bool centre) {
  const auto c = a.build();
  if (centre) {
    std::vector<Dipole> ds;
    if (!dipole_decompose(c, ds)) throw unsupported_instance("centre correlation needs a dipole-decomposable config");
    const auto v = center_dipole_corr(ds);
    std::cout << v.str() << "\n~ " << fixed(v.to_long_double()) << "\n";
    return ok;
  }
  if (c.k() != c.l()) throw std::invalid_argument("correlations are defined for k = l");
  const auto e = count_exact(c);
  const Rational w(e.value, diamond_count(c.n));
  std::cout << to_string(w) << "\n~ " << fixed(static_cast<long double>(w)) << "\npath: " << path_name(e.path) << "\n";
  return ok;
}

int cmd_verify(const std::string& suite, int max_n) {
  SuiteReport r;
  if (suite == "oracle")
    r = verify_oracle(max_n);
  else if (suite == "identities")
    r = verify_identities(std::min(max_n, 3));
  else if (suite == "asymptotics")
    r = verify_asymptotics();
  else
    throw std::invalid_argument("unknown suite " + suite);
  print_report(std::cout, r);
  return r.all_pass() ? ok : invariant_failure;
}

struct SweepArgs {
  std::string law;
  std::string n_grid, d_grid;
  long double alpha = 1, beta = 1, gamma = 0.25L, delta = 1;
  std::string orientation = "same";
  std::string out;
};

Orientation parse_orientation(const std::string& s) {
  if (s == "same") return Orientation::same;
  if (s == "opposite") return Orientation::opposite;
  throw std::invalid_argument("orientation must be same or opposite");
}

long long scaled(long double x, long long n) {
  const long double v = x * n;
  const long long r = std::llround(v);
  if (std::fabs(v - r) > 1e-9L) throw std::invalid_argument("parameter times n is not an integer");
  return r;
}

Rational rational_of(long double x) {
  // decimal inputs such as 0.25 or 1
  std::ostringstream os;
  os << std::setprecision(15) << x;
  const std::string s = os.str();
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(BigInt(s));
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(BigInt(digits), den);
}

int cmd_sweep(const SweepArgs& a) {
  const Orientation o = parse_orientation(a.orientation);
  LogEvaluator ex, pr;
  std::vector<long long> grid;
  if (a.law == "casimir" || a.law == "casimir-normalised") {
    grid = parse_grid(a.n_grid);
    const bool norm = a.law == "casimir-normalised";
    ex = [&, norm](long long n) {
      const long long x = scaled(a.alpha, n), y = scaled(a.beta, n), d = scaled(a.delta, n);
      return norm ? casimir_normalised_exact_log(x, y, d) : casimir_exact_log(x, y, d, o);
    };
    pr = [&, norm](long long n) {
      return norm ? casimir_normalised(a.alpha, a.beta, a.delta, n).log_value
                  : casimir_ratio(a.alpha, a.beta, a.delta, o).log_value;
    };
  } else if (a.law == "slit-limit") {
    grid = parse_grid(a.d_grid);
    ex = [o](long long d) { return slit_limit_exact(d, o); };
    pr = [o](long long d) { return slit_limit(d, o).log_value; };
  } else if (a.law == "p-asym") {
    grid = parse_grid(a.n_grid);
    ex = log_p_exact;
    pr = [](long long n) { return p_n_asym(n).log_value; };
  } else if (a.law == "bars") {
    grid = parse_grid(a.n_grid);
    const Rational al = rational_of(a.alpha), be = rational_of(a.beta), ga = rational_of(a.gamma),
                   de = rational_of(a.delta);
    ex = [=](long long n) { return bars_exact_log(bar_config_from(al, be, ga, de, static_cast<int>(n))); };
    pr = [=](long long n) { return bars_asym(al, be, ga, de, static_cast<int>(n)).log_value; };
  } else if (a.law == "boundary-move") {
    grid = parse_grid(a.n_grid);
    ex = [&](long long n) {
      return log_move_hole_ratio(make_config(static_cast<int>(n), {static_cast<int>(scaled(a.alpha, n))}), 0);
    };
    pr = [&](long long) { return 0.5L * std::log((2 - a.alpha) / a.alpha); };
  } else {
    throw std::invalid_argument("unknown law " + a.law + " (casimir, casimir-normalised, slit-limit, p-asym, bars, boundary-move)");
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw std::invalid_argument("cannot write " + a.out);
    os = &file;
  }
  *os << "n,exact_log,predicted_log,rel_error\n";
  int failures = 0;
  char buf[160];
  for (long long n : grid) {
    try {
      const long double e = ex(n), p = pr(n);
      std::snprintf(buf, sizeof buf, "%lld,%.15Le,%.15Le,%.6Le\n", n, e, p, std::fabs(std::expm1(e - p)));
      *os << buf;
    } catch (const std::exception& err) {
      ++failures;
      *os << n << ",,,\n";
      std::cerr << "row n=" << n << ": " << err.what() << "\n";
    }
  }
  return failures ? unsupported : ok;
}

int cmd_equilibrium(const std::vector<double>& gammas_in, const std::vector<double>& displace, double n) {
  std::vector<long double> gammas(gammas_in.begin(), gammas_in.end());
  const auto r = find_equilibrium(gammas);
  auto j = equilibrium_report(r);
  if (!displace.empty()) {
    if (displace.size() != gammas.size()) throw std::invalid_argument("one displacement per gap");
    BarSystem moved = r.system;
    for (std::size_t i = 0; i < displace.size(); ++i) moved.alphas[i] += displace[i];
    const auto d = displacement_likelihood(moved, r.system, n);
    std::vector<double> al;
    for (long double x : moved.alphas) al.push_back(static_cast<double>(x));
    j["displacement"] = {{"alphas", al},
                         {"lambda", static_cast<double>(d.lambda)},
                         {"n", n},
                         {"log_likelihood", static_cast<double>(d.log_likelihood)}};
  }
  std::cout << j.dump(2) << "\n";
  return ok;
}

int cmd_constants() {
  std::cout << std::setprecision(32) << "A = " << glaisher() << "\n" << std::setprecision(15);
  std::cout << "2^(1/12) e^(1/4) / A^3 = " << constants::p_prefactor() << "\n";
  std::cout << "2^(1/3) e^(1/4) / A^3 = " << constants::slit_same() << "\n";
  std::cout << "pi^(1/2) e^(1/4) 2^(-1/6) / A^3 = " << constants::slit_opposite() << "\n";
  std::cout << "e^(1/4) 2^(-5/12) / A^3 = " << constants::defect() << "\n";
  std::cout << "e^(1/3) / A^4 = " << constants::bars() << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts, correlations and asymptotics for defects on the axis of Aztec rectangles"};
  app.require_subcommand(1);

  ConfigArgs count_args, corr_args;
  auto* count = app.add_subcommand("count", "exact number of perfect matchings");
  count_args.attach(count);

  bool centre = false;
  auto* corr = app.add_subcommand("corr", "finite-size correlation (k = l), or the centre limit with --center");
  corr_args.attach(corr);
  corr->add_flag("--center", centre, "n -> infinity correlation at the centre");

  std::string suite;
  int max_n = 3;
  auto* verify = app.add_subcommand("verify", "run an invariant battery");
  verify->add_option("suite", suite, "oracle | identities | asymptotics")->required();
  verify->add_option("--max-n", max_n, "largest n for exhaustive checks");

  SweepArgs sw;
  double alpha = 1, beta = 1, gamma = 0.25, delta = 1;
  auto* sweep = app.add_subcommand("sweep", "exact vs predicted values over a grid, as CSV");
  sweep->add_option("law", sw.law, "casimir | casimir-normalised | slit-limit | p-asym | bars | boundary-move")->required();
  sweep->add_option("--n", sw.n_grid, "grid start:stop:step");
  sweep->add_option("--d", sw.d_grid, "grid start:stop:step");
  sweep->add_option("--alpha", alpha);
  sweep->add_option("--beta", beta);
  sweep->add_option("--gamma", gamma);
  sweep->add_option("--delta", delta);
  sweep->add_option("--orientation", sw.orientation, "same | opposite");
  sweep->add_option("--out", sw.out, "CSV path (default stdout)");

  std::vector<double> gammas, displace;
  double nn = 40;
  auto* eq = app.add_subcommand("equilibrium", "equilibrium gaps of bars of charge");
  eq->add_option("--gammas", gammas, "bar lengths")->delimiter(',')->required();
  eq->add_option("--displace", displace, "shift applied to the equilibrium gaps")->delimiter(',');
  eq->add_option("--n", nn, "scale for the displacement log-likelihood");

  auto* consts = app.add_subcommand("constants", "Glaisher-Kinkelin constant and derived prefactors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; usage errors count as unsupported input
    return app.exit(e) == 0 ? ok : unsupported;
  }
  sw.alpha = alpha;
  sw.beta = beta;
  sw.gamma = gamma;
  sw.delta = delta;

  try {
    if (*count) return cmd_count(count_args);
    if (*corr) return cmd_corr(corr_args, centre);
    if (*verify) return cmd_verify(suite, max_n);
    if (*sweep) return cmd_sweep(sw);
    if (*eq) return cmd_equilibrium(gammas, displace, nn);
    if (*consts) return cmd_constants();
  } catch (const unsupported_instance& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const instance_too_large& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const nonconvergence_error& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return nonconvergence;
  } catch (const multistart_disagreement& e) {
    std::cerr << "multi-start disagreement: " << e.what() << "\n";
    return invariant_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  }
  return ok;
}
