#pragma once

#include "aztec/asymptotics.hpp"
#include "aztec/closed_forms.hpp"
#include "aztec/oracle.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace aztec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

inline void print_report(std::ostream& os, const SuiteReport& r) {
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << r.suite << ": " << (r.all_pass() ? "all passed" : "FAILURES") << "\n";
}

inline std::string describe(const DefectConfig& c) {
  std::ostringstream os;
  os << "n=" << c.n << " holes={";
  for (std::size_t i = 0; i < c.holes.size(); ++i) os << (i ? "," : "") << c.holes[i];
  os << "} seps={";
  for (std::size_t i = 0; i < c.seps.size(); ++i) os << (i ? "," : "") << c.seps[i];
  os << "}";
  return os.str();
}

// ---- enumeration ----

// Every (holes, seps) split of subsets of 1..width with the given sizes.
inline void for_each_config(int n, int k, int l, const std::function<void(const DefectConfig&)>& f) {
  const int w = 2 * n + k - l;
  if (w < k + l || w <= 0) return;
  std::vector<int> pick(w, 0);  // 0 free, 1 hole, 2 sep
  std::function<void(int, int, int)> rec = [&](int pos, int kh, int ks) {
    if (kh == k && ks == l) {
      DefectConfig c{n, {}, {}};
      for (int j = 0; j < w; ++j) {
        if (pick[j] == 1) c.holes.push_back(j + 1);
        if (pick[j] == 2) c.seps.push_back(j + 1);
      }
      f(c);
      return;
    }
    if (pos == w) return;
    rec(pos + 1, kh, ks);
    if (kh < k) {
      pick[pos] = 1;
      rec(pos + 1, kh + 1, ks);
      pick[pos] = 0;
    }
    if (ks < l) {
      pick[pos] = 2;
      rec(pos + 1, kh, ks + 1);
      pick[pos] = 0;
    }
  };
  rec(0, 0, 0);
}

struct FamilyTally {
  int checked = 0, failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  std::string detail() const {
    std::string s = std::to_string(checked) + " configs";
    if (failed) s += ", " + std::to_string(failed) + " mismatches, first: " + first_failure;
    return s;
  }
};

// Formula paths against the DP oracle for every config of each family with n <= max_n.
inline SuiteReport verify_oracle(int max_n) {
  SuiteReport r{"oracle", {}};
  OracleOptions opt{std::max(max_n, default_oracle_max_n())};
  FamilyTally dip, chain, mono, bars;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k)
      for_each_config(n, k, k, [&](const DefectConfig& c) {
        std::vector<Dipole> ds;
        const bool decomposable = dipole_decompose(c, ds);
        if (!decomposable && !alternating_pairs(c)) return;
        const auto e = count_exact(c, opt);
        const bool ok = e.value == count_matchings(c, opt).value;
        (decomposable ? dip : chain).record(ok, describe(c));
      });
    for (int k = 1; k <= 3; ++k)
      for_each_config(n, k, 0, [&](const DefectConfig& c) {
        mono.record(count_exact(c, opt).value == count_matchings(c, opt).value, describe(c));
      });
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        for (int p = 0; p <= 2; ++p)
          for (int q = 0; q <= 2; ++q) {
            if (k + l > n) continue;
            const BarConfig b{n, k, l, p, q};
            const auto c = b.config();
            bars.record(bars_count(b) == count_matchings(c, opt).value, describe(c));
          }
  }
  r.add("dipole families vs oracle", dip.failed == 0 && dip.checked > 0, dip.detail());
  r.add("dipole-base chains vs oracle", chain.failed == 0, chain.detail());
  r.add("monomer configs (k<=3) vs oracle", mono.failed == 0 && mono.checked > 0, mono.detail());
  r.add("bar configs (params<=2) vs oracle", bars.failed == 0 && bars.checked > 0, bars.detail());
  bool diamonds = true;
  std::string dd;
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    const BigInt v = count_matchings(DefectConfig{n, {}, {}}, opt).value;
    dd += (n > 1 ? "," : "") + v.str();
    diamonds = diamonds && v == diamond_count(n);
  }
  r.add("M(AD_2n) = 2^{n(2n+1)}", diamonds, dd);
  return r;
}

// omega(D) = omega(D_odd) omega(D_even) by oracle, for mixed families with n <= max_n.
inline FamilyTally check_factorization(int max_n, const OracleOptions& opt) {
  FamilyTally t;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 2; k <= n; ++k)
      for_each_config(n, k, k, [&](const DefectConfig& c) {
        std::vector<Dipole> ds;
        if (!dipole_decompose(c, ds)) return;
        std::vector<Dipole> odd, even;
        for (const auto& d : ds) (d.odd() ? odd : even).push_back(d);
        if (odd.empty() || even.empty()) return;
        const auto lhs = corr_finite(c, opt);
        const auto rhs = corr_finite(config_from_dipoles(n, odd), opt) * corr_finite(config_from_dipoles(n, even), opt);
        t.record(lhs == rhs, describe(c));
      });
  return t;
}

inline FamilyTally check_monomer_paths(int max_n) {
  FamilyTally t;
  for (int n = 1; n <= max_n; ++n)
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
      std::vector<int> s;
      for (int j = 0; j <= n; ++j)
        if (mask >> j & 1) s.push_back(j);
      if (s.size() > 4) continue;
      std::ostringstream os;
      os << "n=" << n << " s=";
      for (int x : s) os << x << ";";
      t.record(monomer_even_count_ratio(n, s) == monomer_even_count_ratio_pq(n, s), os.str());
    }
  return t;
}

inline FamilyTally check_bars_paths(int max_n) {
  FamilyTally t;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; k + l <= n; ++l)
        for (int p = 0; p <= n; ++p)
          for (int q = 0; q <= n; ++q) {
            const BarConfig b{n, k, l, p, q};
            const Rational h = bars_ratio_hyperfactorial(b) * Rational(diamond_count(n));
            t.record(Rational(bars_count(b)) == h, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                      " l=" + std::to_string(l) + " p=" + std::to_string(p) +
                                                      " q=" + std::to_string(q));
          }
  return t;
}

// Normalised slit symmetry slit_ratio(a,b,d) = slit_ratio(a,d,b).
inline FamilyTally check_slit_symmetry(int max_abd) {
  FamilyTally t;
  for (int a = 1; a <= max_abd; ++a)
    for (int b = 1; b <= max_abd; ++b)
      for (int d = 1; d <= max_abd; ++d)
        t.record(slit_ratio(a, b, d, Orientation::same) == slit_ratio(a, d, b, Orientation::same),
                 "a=" + std::to_string(a) + " b=" + std::to_string(b) + " d=" + std::to_string(d));
  return t;
}

// slit_ratio against the centre-correlation route, both orientations.
inline FamilyTally check_slit_routes(int max_abd) {
  FamilyTally t;
  for (int a = 1; a <= max_abd; ++a)
    for (int b = 1; b <= max_abd; ++b)
      for (int d = 0; d <= max_abd; ++d) {
        const std::string tag = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " d=" + std::to_string(d);
        const auto same = slit_pair_corr(a, b, 2 * d, Orientation::same);
        t.record(slit_ratio(a, b, d, Orientation::same) == same / slit_corr(a + b), "same " + tag);
        t.record(slit_ratio(a, b, d, Orientation::opposite) == slit_pair_corr(a, b, 2 * d + 1, Orientation::opposite) / same,
                 "opposite " + tag);
      }
  return t;
}

// Centre pair factor equals the E^2 ratio of two like dipoles at even hole distance.
inline FamilyTally check_pair_factor(int max_h) {
  FamilyTally t;
  for (int h = 2; h <= max_h; h += 2) {
    const auto e = e_squared({1, 1 + h}, {2, 2 + h});
    t.record(e == ExactValue(center_pair_factor(h)), "h=" + std::to_string(h));
  }
  return t;
}

// The exact-zero interaction cases.
inline FamilyTally check_zero_interactions(int max_t) {
  FamilyTally t;
  for (int s = 0; s <= 2; ++s)
    for (int u = s + 1; u <= s + max_t; ++u) {
      const Dipole d1 = Dipole::from_positions(2 * s + 1, 2 * s + 2);
      // odd o x against even o x, and against even x o one site later
      for (const Dipole d2 : {Dipole::from_positions(2 * u, 2 * u + 1), Dipole::from_positions(2 * u + 2, 2 * u + 1)}) {
        if (d2.left() <= d1.right()) continue;
        const auto diff = center_dipole_corr({d1, d2}) - center_dipole_corr({d1}) * center_dipole_corr({d2});
        t.record(diff.is_zero(), "centre s=" + std::to_string(s) + " t=" + std::to_string(u));
        const int n = u + 2;
        const auto fin = dipole_family_corr(n, {d1, d2}) - dipole_corr(n, d1) * dipole_corr(n, d2);
        t.record(fin.is_zero() && dipole_gap(n, d1, d2).is_zero(), "finite n=" + std::to_string(n));
      }
    }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int d = 0; d <= 4; ++d) {
        const std::string tag = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " d=" + std::to_string(d);
        t.record(finite_slit_tail_exact(a, b, 2 * d + 1, Orientation::same).is_zero(), "slits odd gap " + tag);
        t.record(finite_slit_tail_exact(a, b, 2 * d, Orientation::opposite).is_zero(), "slits even gap " + tag);
      }
  return t;
}

inline SuiteReport verify_identities(int max_n = 3) {
  SuiteReport r{"identities", {}};
  OracleOptions opt{std::max(max_n, default_oracle_max_n())};
  const auto fac = check_factorization(max_n, opt);
  r.add("dipole factorization (odd x even) by oracle", fac.failed == 0 && fac.checked > 0, fac.detail());
  const auto sym = check_slit_symmetry(6);
  r.add("normalised slit symmetry a,b,d<=6", sym.failed == 0, sym.detail());
  const auto worked = slit_ratio(1, 2, 1, Orientation::same) == ExactValue(Rational(27, 35)) &&
                      slit_ratio(1, 1, 2, Orientation::same) == ExactValue(Rational(27, 35));
  r.add("slit symmetry worked value 27/35", worked);
  const auto routes = check_slit_routes(4);
  r.add("slit ratio vs centre correlations", routes.failed == 0, routes.detail());
  const auto pf = check_pair_factor(40);
  r.add("centre pair factor = E^2", pf.failed == 0, pf.detail());
  const auto mono = check_monomer_paths(8);
  r.add("monomer count: Pochhammer form = P/Q form, n<=8", mono.failed == 0, mono.detail());
  const auto bars = check_bars_paths(8);
  r.add("bars count: Gamma form = hyperfactorial form, n<=8", bars.failed == 0, bars.detail());
  const auto zero = check_zero_interactions(5);
  r.add("zero-interaction cases are exact zeros", zero.failed == 0, zero.detail());
  return r;
}

// ---- asymptotic decay battery ----

struct DecayCheck {
  std::string name;
  long double first_error, last_error, threshold;
  bool pass() const { return last_error < first_error && last_error < threshold; }
};

inline long double rel_err(long double exact_log, long double pred_log) { return std::fabs(std::expm1(exact_log - pred_log)); }

inline std::vector<DecayCheck> asymptotic_checks() {
  std::vector<DecayCheck> out;
  auto add = [&](std::string name, const std::vector<long long>& grid, const LogEvaluator& ex, const LogEvaluator& pr,
                 long double thr) {
    const auto rec = convergence_probe(ex, pr, grid);
    out.push_back({std::move(name), rec.rel_error.front(), rec.rel_error.back(), thr});
  };
  add("P_n, n=100 -> 1000", {100, 1000}, log_p_exact, [](long long n) { return p_n_asym(n).log_value; }, 0.01L);
  add("P_{3/2}(s), s=50 -> 800", {50, 800}, [](long long s) { return log_p_a_exact(Rational(3, 2), static_cast<int>(s)); },
      [](long long s) { return p_a_asym(Rational(3, 2), s).log_value; }, 0.01L);
  add("slit limit same, d=10 -> 400", {10, 400}, [](long long d) { return slit_limit_exact(d, Orientation::same); },
      [](long long d) { return slit_limit(d, Orientation::same).log_value; }, 0.005L);
  add("slit limit opposite, d=10 -> 400", {10, 400},
      [](long long d) { return slit_limit_exact(d, Orientation::opposite); },
      [](long long d) { return slit_limit(d, Orientation::opposite).log_value; }, 0.005L);
  add("casimir same, n=50 -> 1000", {50, 1000}, [](long long n) { return casimir_exact_log(n, n, n, Orientation::same); },
      [](long long) { return casimir_ratio(1, 1, 1, Orientation::same).log_value; }, 0.01L);
  add("casimir opposite, n=50 -> 1000", {50, 1000},
      [](long long n) { return casimir_exact_log(n, n, n, Orientation::opposite); },
      [](long long) { return casimir_ratio(1, 1, 1, Orientation::opposite).log_value; }, 0.01L);
  add("casimir normalised, n=50 -> 1000", {50, 1000},
      [](long long n) { return casimir_normalised_exact_log(n, n, n); },
      [](long long n) { return casimir_normalised(1, 1, 1, n).log_value; }, 0.01L);
  add("finite slit tail a=2 b=1, d=5 -> 200", {5, 200},
      [](long long d) { return std::log(finite_slit_tail_exact(2, 1, 2 * d, Orientation::same).to_long_double()); },
      [](long long d) { return finite_slit_tail(2, 1, 2 * d, Orientation::same).log_value; }, 0.05L);
  add("giant slit b=1, a=d=n, n=20 -> 2000", {20, 2000},
      [](long long n) { return std::log(std::expm1(giant_slit_exact_log(n, 1, n))); },
      [](long long n) { return std::log(giant_slit_dipole(n, 1, n).to_long_double() - 1); }, 0.01L);
  add("single hole at centre, n=100 -> 500", {100, 500},
      [](long long n) { return log_count_ratio(make_config(static_cast<int>(n), {static_cast<int>(n) + 1})); },
      [](long long n) { return defect_field_asym({Rational(1)}, {}, static_cast<int>(n), {1}).log_value; }, 0.01L);
  add("two holes alpha=1/2,1, n=100 -> 400", {100, 400},
      [](long long n) {
        const int m = static_cast<int>(n);
        return log_count_ratio(make_config(m, {m / 2 + 1, m + 2}));
      },
      [](long long n) {
        return defect_field_asym({Rational(1, 2), Rational(1)}, {}, static_cast<int>(n), {1, 2}).log_value;
      },
      0.01L);
  add("hole and separation, n=100 -> 400", {100, 400},
      [](long long n) {
        const int m = static_cast<int>(n);
        return log_count_ratio(make_config(m, {m / 2 + 1}, {m + 2}));
      },
      [](long long n) {
        return defect_field_asym({Rational(1, 2)}, {Rational(1)}, static_cast<int>(n), {1}, {2}).log_value;
      },
      0.01L);
  add("opposite-parity Coulomb limit, k=3, n=100 -> 800", {100, 800},
      [](long long n) {
        const int m = static_cast<int>(n);
        return coulomb_ratio_exact_log(make_config(m, {m / 2 + 1, m + 1, 3 * m / 2 + 1}));
      },
      [](long long) { return coulomb_limit_log({0.5L, 1, 1.5L}, {}); }, 0.01L);
  add("bars alpha=beta=gamma=delta=1/4, n=40 -> 160", {40, 160},
      [](long long n) {
        const Rational q(1, 4);
        return bars_exact_log(bar_config_from(q, q, q, q, static_cast<int>(n)));
      },
      [](long long n) {
        const Rational q(1, 4);
        return bars_asym(q, q, q, q, static_cast<int>(n)).log_value;
      },
      0.01L);
  for (int twice : {1, 2, 3}) {
    const long double al = twice / 2.0L;
    add("boundary move law alpha=" + std::to_string(twice) + "/2, n=100 -> 500", {100, 500},
        [twice](long long n) {
          const int m = static_cast<int>(n);
          return log_move_hole_ratio(make_config(m, {twice * m / 2}), 0);
        },
        [al](long long) { return 0.5L * std::log((2 - al) / al); }, 0.01L);
  }
  return out;
}

inline SuiteReport verify_asymptotics() {
  SuiteReport r{"asymptotics", {}};
  for (const auto& c : asymptotic_checks()) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "rel. error %.3Le -> %.3Le (limit %.3Lg)", c.first_error, c.last_error,
                  c.threshold);
    r.add(c.name, c.pass(), buf);
  }
  const long double a = glaisher_ld();
  r.add("Glaisher constant", std::fabs(a - 1.28242712910062263687L) < 1e-18L);
  const long double ratio = std::exp(log_glaisher_ratio(2000));
  r.add("Glaisher defining ratio at n=2000", std::fabs(ratio - std::exp(1.0L / 12) / a) < 1e-4L);
  return r;
}

}  // namespace aztec
