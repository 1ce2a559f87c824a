#pragma once

#include "aztec/closed_forms.hpp"
#include "aztec/exact.hpp"
#include "aztec/lattice.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aztec {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

namespace detail {
inline long double pi_ld() { return boost::math::constants::pi<long double>(); }
}  // namespace detail

// ln H(N) with H(N) = 0! 1! ... (N-1)!, summed in 50 digits.
inline HighFloat log_hyperfactorial_hp(unsigned N) {
  HighFloat acc = 0;
  for (unsigned j = 2; j < N; ++j) acc += HighFloat(N - j) * log(HighFloat(j));
  return acc;
}

// Glaisher-Kinkelin constant from ln H(N) and the Barnes tail at N = 200.
inline HighFloat glaisher() {
  static const HighFloat value = [] {
    const unsigned N = 200;
    const HighFloat n = N, ln = log(n);
    HighFloat s = n * n / 2 * ln - 3 * n * n / 4 + n / 2 * log(2 * boost::math::constants::pi<HighFloat>()) -
                  ln / 12 + HighFloat(1) / 12;
    HighFloat np = 1;
    for (int k = 1; k <= 12; ++k) {
      np *= n * n;
      s += boost::math::bernoulli_b2n<HighFloat>(k + 1) / (4 * k * (k + 1) * np);
    }
    return exp(s - log_hyperfactorial_hp(N));
  }();
  return value;
}

inline long double glaisher_ld() { return static_cast<long double>(glaisher()); }

// Limit ratio H(n) / (n^{n^2/2-1/12} (2pi)^{n/2} e^{-3n^2/4}), in log form.
inline long double log_glaisher_ratio(unsigned n) {
  const long double x = n;
  return log_hyperfactorial(n) - ((x * x / 2 - 1.0L / 12) * std::log(x) + x / 2 * std::log(2 * detail::pi_ld()) -
                                  3 * x * x / 4);
}

namespace constants {
// 2^{1/12} e^{1/4} / A^3
inline long double p_prefactor() {
  return std::pow(2.0L, 1.0L / 12) * std::exp(0.25L) / std::pow(glaisher_ld(), 3);
}
// 2^{1/3} e^{1/4} / A^3
inline long double slit_same() { return std::pow(2.0L, 1.0L / 3) * std::exp(0.25L) / std::pow(glaisher_ld(), 3); }
// pi^{1/2} e^{1/4} 2^{-1/6} / A^3
inline long double slit_opposite() {
  return std::sqrt(detail::pi_ld()) * std::exp(0.25L) * std::pow(2.0L, -1.0L / 6) / std::pow(glaisher_ld(), 3);
}
// e^{1/4} 2^{-5/12} / A^3, one per defect
inline long double defect() { return std::exp(0.25L) * std::pow(2.0L, -5.0L / 12) / std::pow(glaisher_ld(), 3); }
// e^{1/3} / A^4
inline long double bars() { return std::exp(1.0L / 3) / std::pow(glaisher_ld(), 4); }
}  // namespace constants

struct AsymResult {
  HighFloat value;
  long double log_value = 0;
  std::string law;
  long double leading_constant = 1;
  Rational exponent = 0;

  static AsymResult make(std::string law, long double log_value, long double c, Rational e) {
    AsymResult r;
    r.value = exp(HighFloat(log_value));
    r.log_value = log_value;
    r.law = std::move(law);
    r.leading_constant = c;
    r.exponent = std::move(e);
    return r;
  }
  long double to_long_double() const { return static_cast<long double>(value); }
};

// Gamma(x+a)/Gamma(x+b), two terms; remainder O(x^-2).
inline long double gamma_ratio_asym(long double x, long double a, long double b) {
  if (x <= 0) throw std::invalid_argument("gamma_ratio_asym needs x > 0");
  return std::pow(x, a - b) * (1 + (a - b) * (a + b - 1) / (2 * x));
}

inline long double log_gamma_ratio_exact(long double x, long double a, long double b) {
  return log_gamma(x + a) - log_gamma(x + b);
}

// ---- P products ----

inline long double log_p_exact(long long n) { return log_slit_p(n); }

inline AsymResult p_n_asym(long long n) {
  if (n < 1) throw std::invalid_argument("p_n_asym needs n >= 1");
  const long double c = constants::p_prefactor();
  return AsymResult::make("P_n", std::log(c) - 0.25L * std::log(static_cast<long double>(n)), c, Rational(-1, 4));
}

// a a positive integer or a non-negative half-integer.
inline AsymResult p_a_asym(const Rational& a, long long s) {
  if (s < 1) throw std::invalid_argument("p_a_asym needs s >= 1");
  const long long t = twice_of(a);
  detail::CompensatedSum acc;
  long double c0;
  if (t % 2 == 0) {
    if (t <= 0) throw std::invalid_argument("integer a must be positive");
    c0 = constants::p_prefactor();
    for (long long i = 1; i <= t / 2; ++i)
      acc.add(log_gamma(i - 0.5L) + log_gamma(i + 0.5L) - 2 * log_gamma(static_cast<long double>(i)));
  } else {
    c0 = 1 / (constants::p_prefactor() * std::sqrt(detail::pi_ld()));
    for (long long i = 1; i <= t / 2; ++i)
      acc.add(log_gamma(static_cast<long double>(i)) + log_gamma(i + 1.0L) - 2 * log_gamma(i + 0.5L));
  }
  const long double c = c0 * std::exp(acc.value());
  return AsymResult::make("P_a(s)", std::log(c) - 0.25L * std::log(static_cast<long double>(s)), c, Rational(-1, 4));
}

inline long double log_p_a_exact(const Rational& a, int s) { return log_eval_gamma_product(p_product_gamma(a, s)); }

// ---- slits ----

// n -> infinity limits of the slit ratios: same -> P_d, opposite -> sqrt(pi) Gamma(d+1)/Gamma(d+1/2) P_d.
inline long double slit_limit_exact(long long d, Orientation o) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  long double v = log_p_exact(d);
  if (o == Orientation::opposite)
    v += 0.5L * std::log(detail::pi_ld()) + log_gamma(d + 1.0L) - log_gamma(d + 0.5L);
  return v;
}

inline AsymResult slit_limit(long long d, Orientation o) {
  if (o == Orientation::same) {
    if (d < 1) throw std::invalid_argument("same-orientation asymptotics need d >= 1");
    const long double c = constants::slit_same();
    return AsymResult::make("slit-limit-same", std::log(c) - 0.25L * std::log(2.0L * d), c, Rational(-1, 4));
  }
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  const long double c = constants::slit_opposite();
  return AsymResult::make("slit-limit-opposite", std::log(c) + 0.25L * std::log(2.0L * d + 1), c, Rational(1, 4));
}

// Chain of like slits, normalised by the merged slit; k-1 gap factors.
inline long double multi_slit_limit_exact(const std::vector<long long>& gaps) {
  detail::CompensatedSum acc;
  for (long long d : gaps) acc.add(log_p_exact(d));
  return acc.value();
}

inline AsymResult multi_slit_limit(const std::vector<long long>& gaps) {
  detail::CompensatedSum acc;
  for (long long d : gaps) {
    if (d < 1) throw std::invalid_argument("gaps must be positive");
    acc.add(-0.25L * std::log(2.0L * d));
  }
  const long double c = std::pow(constants::slit_same(), static_cast<long double>(gaps.size()));
  return AsymResult::make("multi-slit-limit", std::log(c) + acc.value(), c,
                          Rational(-static_cast<long long>(gaps.size()), 4));
}

// omega(slit a, slit b; gap) - omega(a) omega(b); same uses gap 2d, opposite 2d+1.
inline ExactValue finite_slit_tail_exact(int a, int b, int gap, Orientation o) {
  return slit_pair_corr(a, b, gap, o) - slit_corr(a) * slit_corr(b);
}

// Zero cases: same orientation with odd gap, opposite with even gap.
inline AsymResult finite_slit_tail(int a, int b, int gap, Orientation o) {
  if (a < 1 || b < 1 || gap < 1) throw std::invalid_argument("finite_slit_tail needs a,b,gap >= 1");
  AsymResult r;
  r.law = "finite-slit-tail";
  r.exponent = -2;
  const bool even = gap % 2 == 0;
  if ((o == Orientation::same) != even) {
    r.value = 0;
    r.leading_constant = 0;
    r.log_value = -std::numeric_limits<long double>::infinity();
    return r;
  }
  const long double d = o == Orientation::same ? gap / 2 : (gap - 1) / 2;
  const long double w = slit_corr(a).to_long_double() * slit_corr(b).to_long_double();
  const long double c = (o == Orientation::same ? 1 : -1) * w * a * b / 4;
  r.leading_constant = c;
  r.value = HighFloat(c) / (HighFloat(d) * HighFloat(d));
  r.log_value = std::log(std::fabs(c)) - 2 * std::log(d);
  return r;
}

// ---- neutral slits at macroscopic scale ----

namespace detail {
inline void check_positive(std::initializer_list<long double> xs) {
  for (long double x : xs)
    if (!(x > 0)) throw std::invalid_argument("argument must be positive");
}
}  // namespace detail

// omega(a,b;2d) / (omega(a) omega(b)); opposite uses gap 2d+1.
inline long double casimir_exact_log(long long a, long long b, long long d, Orientation o) {
  long double v = log_slit_cross_factor(a, b, d);
  if (o == Orientation::opposite) {
    auto lg = [](long double x) { return log_gamma(x); };
    v += lg(a + b + d + 1.0L) + lg(a + d + 0.5L) + lg(b + d + 0.5L) + lg(d + 1.0L) - lg(a + b + d + 0.5L) -
         lg(a + d + 1.0L) - lg(b + d + 1.0L) - lg(d + 0.5L);
  }
  return v;
}

inline AsymResult casimir_ratio(long double alpha, long double beta, long double delta, Orientation o) {
  detail::check_positive({alpha, beta, delta});
  const long double br = (alpha + delta) * (beta + delta) / (delta * (alpha + beta + delta));
  const long double v = 0.25L * std::log(br) * (o == Orientation::same ? 1 : -1);
  return AsymResult::make(o == Orientation::same ? "casimir-same" : "casimir-opposite", v, std::exp(v), 0);
}

// omega(a,b;2d) / omega(a+b) = P_a P_b P_d P_{a+b+d} / (P_{a+b} P_{a+d} P_{b+d})
inline long double casimir_normalised_exact_log(long long a, long long b, long long d) {
  auto P = [](long long m) { return log_p_exact(m); };
  return P(a) + P(b) + P(d) + P(a + b + d) - P(a + b) - P(a + d) - P(b + d);
}

inline AsymResult casimir_normalised(long double alpha, long double beta, long double delta, long double n) {
  detail::check_positive({alpha, beta, delta, n});
  const long double br =
      (alpha + beta) * (alpha + delta) * (beta + delta) / (alpha * beta * delta * (alpha + beta + delta));
  const long double c = constants::p_prefactor() * std::pow(br, 0.25L);
  return AsymResult::make("casimir-normalised", std::log(c) - 0.25L * std::log(n), c, Rational(-1, 4));
}

// ---- giant slit against a short slit ----

inline AsymResult giant_slit_dipole(long double a, long double b, long double d) {
  detail::check_positive({a, b, d});
  const long double v = 1 + b / 4 * a / (d * (a + d));
  return AsymResult::make("giant-slit", std::log(v), v, 0);
}

inline long double giant_slit_exact_log(long long a, long long b, long long d) { return log_slit_cross_factor(a, b, d); }

enum class GiantRegime { near, comparable, far };

struct GiantLeading {
  GiantRegime regime;
  long double value;  // leading term of ratio - 1, b = 1, a = n, d = delta n^eps
};

inline GiantLeading giant_slit_regime(long double delta, const Rational& eps, long double n) {
  detail::check_positive({delta, n});
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const long double e = static_cast<long double>(eps);
  if (eps < 1) return {GiantRegime::near, 1 / (4 * delta * std::pow(n, e))};
  if (eps == 1) return {GiantRegime::comparable, 1 / (4 * delta * (1 + delta) * n)};
  return {GiantRegime::far, 1 / (4 * delta * delta * std::pow(n, 2 * e - 1))};
}

// ---- alpha window ----

inline AsymResult boundary_shift_limit(const Rational& alpha, int q) {
  if (alpha <= -1 || alpha >= 1) throw std::invalid_argument("alpha must lie in (-1,1)");
  const long double a = static_cast<long double>(alpha);
  const long double v = q * 0.5L * std::log((1 - a) / (1 + a));
  return AsymResult::make("boundary-shift", v, std::exp(v), 0);
}

// ---- log-space exact counts ----

inline long double log_pochhammer(long double a, long long m) { return log_gamma(a + m) - log_gamma(a); }

inline long double log_dipole_corr(int n, const Dipole& d) {
  if (d.left() < 1 || d.right() > 2 * n) throw std::invalid_argument("dipole out of range for n");
  const int s = d.s;
  auto P = [](long double a, long long m) { return log_pochhammer(a, m); };
  switch (d.kind) {
    case Dipole::Kind::hole_sep_odd:
      return P(0.5L, s + 1) + P(0.5L, n - s - 1) - P(1, s) - P(1, n - s - 1);
    case Dipole::Kind::hole_sep_even:
      return P(0.5L, s) + P(0.5L, n - s) - P(1, s - 1) - P(1, n - s);
    default:
      return P(0.5L, s) + P(0.5L, n - s) - P(1, s) - P(1, n - s - 1);
  }
}

inline long double log_dipole_family_corr(int n, const std::vector<Dipole>& ds) {
  check_disjoint(ds);
  detail::CompensatedSum acc;
  for (const auto& d : ds) acc.add(log_dipole_corr(n, d));
  std::vector<int> holes[2], seps[2];
  detail::split_flavours(ds, holes, seps);
  acc.add(log_e_squared(holes[0], seps[0]));
  acc.add(log_e_squared(holes[1], seps[1]));
  return acc.value();
}

// ln(M(c) / M(AD_{2n})) for holes-only configs and k = l alternating-pair configs.
inline long double log_count_ratio(const DefectConfig& c) {
  c.validate();
  if (c.holes.empty() && c.seps.empty()) return 0;
  if (c.seps.empty()) {
    if (auto b = as_bar_config(c)) return log_bars_count(*b) - static_cast<long double>(c.n) * (2 * c.n + 1) * std::log(2.0L);
    return log_packing_ratio(c);
  }
  if (c.k() == c.l()) {
    std::vector<Dipole> ds;
    if (dipole_decompose(c, ds)) return log_dipole_family_corr(c.n, ds);
    if (alternating_pairs(c)) {
      DefectConfig packed;
      const long double r = log_packing_ratio(c, MoveOrder::leftmost_first, &packed);
      std::vector<Dipole> pds;
      if (!dipole_decompose(packed, pds)) throw std::logic_error("packed base is not dipole-decomposable");
      return r + log_dipole_family_corr(c.n, pds);
    }
  }
  throw unsupported_instance("no log-space family covers this configuration");
}

inline long double log_count(const DefectConfig& c) {
  return log_count_ratio(c) + static_cast<long double>(c.n) * (2 * c.n + 1) * std::log(2.0L);
}

// ---- defects at macroscopic positions ----

struct DefectExponents {
  long long left, right;  // axis sites strictly left / right of the defect
};

inline DefectExponents defect_exponents(int n, int k, int l, long long pos) {
  const long long w = 2LL * n + k - l;
  if (pos < 1 || pos > w) throw std::invalid_argument("position off the axis");
  return {pos - 1, w - pos};
}

namespace detail {

inline long double defect_field_log(const std::vector<long double>& alphas, const std::vector<long double>& betas,
                                    const std::vector<long long>& hole_pos, const std::vector<long long>& sep_pos,
                                    int n) {
  const int k = static_cast<int>(alphas.size()), l = static_cast<int>(betas.size());
  CompensatedSum acc;
  acc.add((k + l) * (std::log(constants::defect()) - 0.25L * std::log(static_cast<long double>(n))));
  auto boundary = [&](long double x, long long pos) {
    const auto e = defect_exponents(n, k, l, pos);
    return 0.5L * (e.left + 0.5L) * std::log(x / 2) + 0.5L * (e.right + 0.5L) * std::log(1 - x / 2);
  };
  for (int j = 0; j < l; ++j) acc.add(boundary(betas[j], sep_pos[j]));
  for (int i = 0; i < k; ++i) acc.add(-boundary(alphas[i], hole_pos[i]));
  auto half_log = [](long double x) { return 0.5L * std::log(std::fabs(x) / 2); };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) acc.add(half_log(alphas[j] - alphas[i]));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) acc.add(half_log(betas[j] - betas[i]));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) acc.add(-half_log(alphas[i] - betas[j]));
  return acc.value();
}

inline void check_field_positions(const std::vector<long double>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0 && xs[i] < 2)) throw std::invalid_argument("positions must lie in (0,2)");
    if (i && !(xs[i] > xs[i - 1])) throw std::invalid_argument("positions must increase");
  }
}

inline void check_disjoint_positions(const std::vector<long double>& a, const std::vector<long double>& b) {
  for (long double x : a)
    for (long double y : b)
      if (x == y) throw std::invalid_argument("coincident hole and separation positions");
}

}  // namespace detail

// Holes at alpha_i n + c_i, separations at beta_j n + d_j; value is M / M(AD_{2n}).
inline AsymResult defect_field_asym(const std::vector<Rational>& alphas, const std::vector<Rational>& betas, int n,
                                    const std::vector<int>& c = {}, const std::vector<int>& d = {}) {
  std::vector<long double> a, b;
  std::vector<long long> hp, sp;
  auto place = [n](const std::vector<Rational>& xs, const std::vector<int>& off, std::vector<long double>& fl,
                   std::vector<long long>& pos) {
    if (!off.empty() && off.size() != xs.size()) throw std::invalid_argument("one offset per defect");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Rational s = xs[i] * n;
      if (denom(s) != 1) throw std::invalid_argument("position times n must be an integer");
      fl.push_back(static_cast<long double>(xs[i]));
      pos.push_back(static_cast<long long>(numer(s)) + (off.empty() ? 0 : off[i]));
    }
  };
  place(alphas, c, a, hp);
  place(betas, d, b, sp);
  detail::check_field_positions(a);
  detail::check_field_positions(b);
  detail::check_disjoint_positions(a, b);
  const int k = static_cast<int>(a.size()), l = static_cast<int>(b.size());
  const long double cst = std::pow(constants::defect(), static_cast<long double>(k + l));
  return AsymResult::make("defect-field", detail::defect_field_log(a, b, hp, sp, n), cst, Rational(-(k + l), 4));
}

// Real positions approximated by s_i/n within n^{-1-1/(k+l)}.
inline AsymResult defect_field_asym_real(const std::vector<long double>& alphas, const std::vector<long double>& betas,
                                         int n, const std::vector<long long>& s, const std::vector<long long>& t) {
  detail::check_field_positions(alphas);
  detail::check_field_positions(betas);
  detail::check_disjoint_positions(alphas, betas);
  if (s.size() != alphas.size() || t.size() != betas.size()) throw std::invalid_argument("one integer position per defect");
  const int k = static_cast<int>(alphas.size()), l = static_cast<int>(betas.size());
  const long double tol = std::pow(static_cast<long double>(n), -1 - 1.0L / std::max(1, k + l));
  for (int i = 0; i < k; ++i)
    if (std::fabs(alphas[i] - static_cast<long double>(s[i]) / n) >= tol)
      throw std::invalid_argument("hole position outside the approximation tolerance");
  for (int j = 0; j < l; ++j)
    if (std::fabs(betas[j] - static_cast<long double>(t[j]) / n) >= tol)
      throw std::invalid_argument("separation position outside the approximation tolerance");
  const long double cst = std::pow(constants::defect(), static_cast<long double>(k + l));
  return AsymResult::make("defect-field-real", detail::defect_field_log(alphas, betas, s, t, n), cst,
                          Rational(-(k + l), 4));
}

// Denominators q <= q_cap with |x_i - p_i/q| < q^{-1-1/k} for every i.
inline std::vector<long long> diophantine_denominators(const std::vector<long double>& xs, long long q_cap) {
  if (xs.empty()) throw std::invalid_argument("need at least one number");
  const long double k = static_cast<long double>(xs.size());
  std::vector<long long> out;
  for (long long q = 1; q <= q_cap; ++q) {
    const long double tol = std::pow(static_cast<long double>(q), -1 - 1 / k);
    bool ok = true;
    for (long double x : xs)
      if (std::fabs(x - std::round(x * q) / q) >= tol) {
        ok = false;
        break;
      }
    if (ok) out.push_back(q);
  }
  return out;
}

// Opposite-parity limit: normalised by single-defect counts, only the Coulomb factors survive.
inline long double coulomb_limit_log(const std::vector<long double>& alphas, const std::vector<long double>& betas) {
  detail::check_field_positions(alphas);
  detail::check_field_positions(betas);
  detail::check_disjoint_positions(alphas, betas);
  if ((alphas.size() + betas.size()) % 2 == 0) throw std::invalid_argument("k and l must have opposite parities");
  detail::CompensatedSum acc;
  auto half_log = [](long double x) { return 0.5L * std::log(std::fabs(x) / 2); };
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) acc.add(half_log(alphas[j] - alphas[i]));
  for (std::size_t i = 0; i < betas.size(); ++i)
    for (std::size_t j = i + 1; j < betas.size(); ++j) acc.add(half_log(betas[j] - betas[i]));
  for (long double x : alphas)
    for (long double y : betas) acc.add(-half_log(x - y));
  return acc.value();
}

// Exact side of the opposite-parity limit for holes-only configs; every count is
// taken relative to the diamond of its own height.
inline long double coulomb_ratio_exact_log(const DefectConfig& c) {
  if (!c.seps.empty()) throw unsupported_instance("exact opposite-parity ratio implemented for holes only");
  if (c.k() % 2 == 0) throw std::invalid_argument("k must be odd when l = 0");
  const int w = c.width();
  const int m = (w - 1) / 2;  // singles live on AR_{2m, 2m+1}
  long double v = log_count_ratio(c);
  for (int h : c.holes) v -= log_count_ratio(DefectConfig{m, {h}, {}});
  return v;
}

// ---- bars of charge ----

// Sum over pairs of weight(|i-j|) * eps_ij, eps = +1 iff an even number of points lie strictly between.
inline long double iset_sum(const std::vector<long double>& pts, const std::function<long double(long double)>& weight) {
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const long double x = std::fabs(pts[j] - pts[i]);
      const int eps = (j - i - 1) % 2 == 0 ? 1 : -1;
      acc.add(eps * weight(x));
    }
  return acc.value();
}

inline long double x2logx(long double x) { return x == 0 ? 0 : x * x * std::log(x); }

inline std::vector<long double> bars_iset(long double alpha, long double beta, long double gamma, long double delta) {
  return {0, alpha, alpha + gamma, alpha + beta + gamma, alpha + beta + gamma + delta, 1 + gamma + delta};
}

namespace detail {
inline void check_bars_domain(long double a, long double b, long double g, long double d, bool allow_zero_bars) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("alpha, beta must be positive");
  if (allow_zero_bars ? !(g >= 0 && d >= 0) : !(g > 0 && d > 0)) throw std::invalid_argument("gamma, delta out of range");
  if (!(a + b < 1)) throw std::invalid_argument("alpha + beta must be < 1");
}
}  // namespace detail

// F over the I set; zero-length gaps contribute 0.
inline long double bars_f(long double alpha, long double beta, long double gamma, long double delta) {
  detail::check_bars_domain(alpha, beta, gamma, delta, true);
  return iset_sum(bars_iset(alpha, beta, gamma, delta), x2logx);
}

inline long double free_energy(long double alpha, long double beta, long double gamma, long double delta) {
  return 0.25L * std::log(2.0L) + bars_f(alpha, beta, gamma, delta) / 8;
}

// Per-site log of the exact count, scaled by 4n(2n+1).
inline long double free_energy_exact(const BarConfig& b) {
  return log_bars_count(b) / (4.0L * b.n * (2 * b.n + 1));
}

inline AsymResult bars_asym(const Rational& alpha, const Rational& beta, const Rational& gamma, const Rational& delta,
                            int n) {
  for (const Rational* x : {&alpha, &beta, &gamma, &delta})
    if (denom(*x * n) != 1) throw std::invalid_argument("parameters times n must be integers");
  const long double a = static_cast<long double>(alpha), b = static_cast<long double>(beta),
                    g = static_cast<long double>(gamma), d = static_cast<long double>(delta);
  detail::check_bars_domain(a, b, g, d, false);
  const long double nn = static_cast<long double>(n) * n;
  const long double prod = iset_sum(bars_iset(a, b, g, d), [nn](long double x) {
    return x == 0 ? 0 : (x * x * nn - 1.0L / 6) * std::log(x);
  });
  const long double c = constants::bars();
  return AsymResult::make("bars", std::log(c) - std::log(static_cast<long double>(n)) / 3 + prod, c, Rational(-1, 3));
}

inline BarConfig bar_config_from(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                 const Rational& delta, int n) {
  auto i = [n](const Rational& x) {
    const Rational v = x * n;
    if (denom(v) != 1) throw std::invalid_argument("parameters times n must be integers");
    return static_cast<int>(numer(v));
  };
  return BarConfig{n, i(alpha), i(beta), i(gamma), i(delta)};
}

// ln(bars_count / M(AD_{2n}))
inline long double bars_exact_log(const BarConfig& b) {
  return log_bars_count(b) - static_cast<long double>(b.n) * (2 * b.n + 1) * std::log(2.0L);
}

// ---- convergence probes ----

struct ConvergenceRecord {
  std::vector<long long> grid;
  std::vector<long double> exact_log, predicted_log, rel_error;

  bool decays() const { return rel_error.size() >= 2 && rel_error.back() < rel_error.front(); }
  // indices i where rel_error[i] > rel_error[i-1]
  std::vector<std::size_t> non_monotone() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < rel_error.size(); ++i)
      if (rel_error[i] > rel_error[i - 1]) out.push_back(i);
    return out;
  }
};

struct probe_error : std::runtime_error {
  std::size_t index;
  probe_error(std::size_t i, const std::string& what)
      : std::runtime_error("grid point " + std::to_string(i) + ": " + what), index(i) {}
};

using LogEvaluator = std::function<long double(long long)>;

inline ConvergenceRecord convergence_probe(const LogEvaluator& exact, const LogEvaluator& predicted,
                                           const std::vector<long long>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  ConvergenceRecord r;
  r.grid = grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    long double e, p;
    try {
      e = exact(grid[i]);
      p = predicted(grid[i]);
    } catch (const std::exception& ex) {
      throw probe_error(i, ex.what());
    }
    r.exact_log.push_back(e);
    r.predicted_log.push_back(p);
    r.rel_error.push_back(std::fabs(std::expm1(e - p)));
  }
  return r;
}

inline std::vector<long long> parse_grid(const std::string& spec) {
  long long a, b, s = 1;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  in >> a >> c1 >> b;
  if (!in || c1 != ':') throw std::invalid_argument("grid must be start:stop[:step]");
  if (in >> c2) {
    if (c2 != ':' || !(in >> s)) throw std::invalid_argument("grid must be start:stop[:step]");
  }
  if (s <= 0 || b < a) throw std::invalid_argument("grid must be non-empty with positive step");
  std::vector<long long> out;
  for (long long x = a; x <= b; x += s) out.push_back(x);
  return out;
}

inline void write_csv(std::ostream& os, const ConvergenceRecord& r) {
  os << "n,exact_log,predicted_log,rel_error\n";
  char buf[160];
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%lld,%.15Le,%.15Le,%.6Le\n", r.grid[i], r.exact_log[i], r.predicted_log[i],
                  r.rel_error[i]);
    os << buf;
  }
}

}  // namespace aztec
