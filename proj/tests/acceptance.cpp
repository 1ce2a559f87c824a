// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "aztec/asymptotics.hpp"
#include "aztec/equilibrium.hpp"
#include "aztec/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

using namespace aztec;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what) {
  std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << what << std::endl;
  if (!pass) ++failures;
}

std::string fmt(const char* f, long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify_oracle(3);
  const double s = seconds_since(t0);
  std::string detail;
  bool ok = true;
  for (const auto& c : r.checks) {
    if (c.name.rfind("M(AD", 0) == 0) continue;  // criterion 2
    ok = ok && c.pass;
    detail += c.name + ": " + c.detail + "; ";
  }
  report(1, ok && s < 60, "oracle equivalence, 2n<=6: " + detail + fmt("%.1Lfs", s));
}

void criterion2() {
  bool ok = true;
  std::string vals;
  for (int n = 1; n <= 3; ++n) {
    const BigInt v = count_matchings(DefectConfig{n, {}, {}}).value;
    ok = ok && v == pow2(static_cast<unsigned long>(n) * (2 * n + 1));
    vals += (n > 1 ? ", " : "") + v.str();
  }
  ok = ok && vals == "8, 1024, 2097152";
  report(2, ok, "M(AD_2n) by oracle = " + vals);
}

void criterion3() {
  const auto t = check_factorization(3, OracleOptions{4});
  report(3, t.failed == 0 && t.checked > 0, "odd/even factorization, mixed families: " + t.detail());
}

void criterion4() {
  const auto pf = check_pair_factor(40);
  const ExactValue four_fifths(Rational(4, 5));
  const auto d = [](int h, int s) { return Dipole::from_positions(h, s); };
  const bool direct = slit_ratio(1, 1, 1, Orientation::same) == four_fifths;
  const bool via_centre = center_dipole_corr({d(1, 2), d(5, 6)}) / center_dipole_corr({d(1, 2), d(3, 4)}) == four_fifths;
  const auto sym = check_slit_symmetry(6);
  const bool worked = slit_ratio(1, 2, 1, Orientation::same) == ExactValue(Rational(27, 35)) &&
                      slit_ratio(1, 1, 2, Orientation::same) == ExactValue(Rational(27, 35));
  const bool ok = pf.failed == 0 && direct && via_centre && sym.failed == 0 && worked;
  report(4, ok,
         "(a) pair factor = E^2: " + pf.detail() + "; (b) 4/5 direct " + (direct ? "ok" : "no") + ", via centre " +
             (via_centre ? "ok" : "no") + "; (c) normalised symmetry: " + sym.detail() + ", 27/35 " +
             (worked ? "ok" : "no"));
}

void criterion5() {
  const auto m = check_monomer_paths(8);
  const auto b = check_bars_paths(8);
  report(5, m.failed == 0 && b.failed == 0 && m.checked > 0 && b.checked > 0,
         "dual paths, n<=8: monomers " + m.detail() + "; bars " + b.detail());
}

void criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  const long double e100 = rel_err(log_p_exact(100), p_n_asym(100).log_value);
  const long double e1000 = rel_err(log_p_exact(1000), p_n_asym(1000).log_value);
  const double s = seconds_since(t0);
  report(6, e1000 < 0.01L && e1000 < e100 && s < 5,
         "P_n: rel. error " + fmt("%.3Le", e100) + " (n=100) -> " + fmt("%.3Le", e1000) + " (n=1000), " +
             fmt("%.3Lfs", s));
}

void criterion7() {
  const long double ex = std::exp(casimir_exact_log(1000, 1000, 1000, Orientation::same));
  const long double target = std::pow(4.0L / 3, 0.25L);
  const long double err = std::fabs(ex / target - 1);
  report(7, err < 0.01L, "casimir ratio at n=1000: " + fmt("%.6Lf", ex) + " vs " + fmt("%.6Lf", target) +
                             " (rel. error " + fmt("%.2Le", err) + ")");
}

void criterion8() {
  bool ok = true;
  std::string detail;
  for (int twice : {1, 2, 3}) {
    const int n = 500;
    const long double al = twice / 2.0L;
    const long double r = std::exp(log_move_hole_ratio(make_config(n, {twice * n / 2}), 0));
    const long double lim = std::sqrt((2 - al) / al);
    const long double err = std::fabs(r / lim - 1);
    ok = ok && err < 0.01L;
    detail += fmt("alpha=%.1Lf: ", al) + fmt("%.5Lf", r) + " vs " + fmt("%.5Lf", lim) + "; ";
  }
  report(8, ok, "boundary move ratio at n=500: " + detail);
}

void criterion9() {
  const BarConfig b{40, 10, 10, 10, 10};
  const long double ex = free_energy_exact(b), pr = free_energy(0.25L, 0.25L, 0.25L, 0.25L);
  const long double err = std::fabs(ex - pr);
  report(9, err < 1e-2L, "free energy n=40, k=l=p=q=10: exact " + fmt("%.6Lf", ex) + " vs " + fmt("%.6Lf", pr) +
                             " (|diff| " + fmt("%.2Le", err) + ")");
}

void criterion10() {
  const auto r = find_equilibrium({0.25L, 0.25L});
  const auto& a = r.system.alphas;
  const long double literal = std::fabs(a[0] - a[1]);
  const long double outer = std::fabs(a[0] - r.system.last_gap());
  bool neg = !r.hessian_eigs.empty();
  for (double e : r.hessian_eigs) neg = neg && e < -1e-8;
  const auto g = f_gradient(r.system), fd = f_gradient_fd(r.system);
  long double fd_err = 0;
  // at the optimum the gradient is ~0, so compare at a generic interior point too
  const BarSystem probe{{0.25L, 0.25L}, {0.3L, 0.25L}};
  const auto gp = f_gradient(probe), fp = f_gradient_fd(probe);
  for (std::size_t i = 0; i < gp.size(); ++i)
    fd_err = std::max(fd_err, std::fabs(gp[i] - fp[i]) / std::max(1.0L, std::fabs(gp[i])));
  for (std::size_t i = 0; i < g.size(); ++i) fd_err = std::max(fd_err, std::fabs(g[i] - fd[i]));
  const bool subs = r.grad_norm < 1e-10L && neg && fd_err < 1e-6L;
  report(10, literal < 1e-8L && subs,
         "equilibrium gamma=delta=1/4: |alpha0-beta0| = " + fmt("%.3Le", literal) + " (alpha0 " + fmt("%.8Lf", a[0]) +
             ", beta0 " + fmt("%.8Lf", a[1]) + "); outer gaps differ by " + fmt("%.1Le", outer) + "; grad " +
             fmt("%.1Le", r.grad_norm) + "; hessian " + (neg ? "negative definite" : "NOT negative definite") +
             "; fd gradient mismatch " + fmt("%.1Le", fd_err));
}

void criterion11() {
  const auto t = check_zero_interactions(5);
  report(11, t.failed == 0 && t.checked > 0, "zero-interaction cases are exact rational zeros: " + t.detail());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failures ? 1 : 0;
}
