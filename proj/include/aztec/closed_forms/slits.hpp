#pragma once

#include "aztec/closed_forms/dipoles.hpp"

#include <stdexcept>
#include <vector>

namespace aztec {

enum class Orientation { same, opposite };

// Slits laid out from axis label 1. A slit with hole_first=true is [o x]_a, else [x o]_a.
struct SlitSpec {
  std::vector<int> lengths;
  std::vector<bool> hole_first;  // empty means all true
  std::vector<int> gaps;         // unaffected sites between consecutive slits

  void validate() const {
    if (lengths.empty()) throw std::invalid_argument("slit spec needs at least one slit");
    if (gaps.size() + 1 != lengths.size()) throw std::invalid_argument("need one gap between consecutive slits");
    if (!hole_first.empty() && hole_first.size() != lengths.size())
      throw std::invalid_argument("one orientation flag per slit");
    for (int a : lengths)
      if (a < 0) throw std::invalid_argument("slit length must be non-negative");
    for (int d : gaps)
      if (d < 0) throw std::invalid_argument("gap must be non-negative");
  }
  bool forward(std::size_t i) const { return hole_first.empty() || hole_first[i]; }
};

inline std::vector<Dipole> slit_dipoles(const SlitSpec& spec) {
  spec.validate();
  std::vector<Dipole> out;
  int pos = 1;
  for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
    for (int m = 0; m < spec.lengths[i]; ++m, pos += 2)
      out.push_back(spec.forward(i) ? Dipole::from_positions(pos, pos + 1) : Dipole::from_positions(pos + 1, pos));
    if (i < spec.gaps.size()) pos += spec.gaps[i];
  }
  return out;
}

// P_m = prod_{i=1}^m Gamma(i)^2 / (Gamma(i-1/2) Gamma(i+1/2))
inline GammaProduct slit_p_gamma(int m) {
  GammaProduct g;
  for (int i = 1; i <= m; ++i) g.mul(i, 2).div(Rational(2 * i - 1, 2)).div(Rational(2 * i + 1, 2));
  return g;
}

inline ExactValue slit_corr(int a) {
  if (a < 0) throw std::invalid_argument("slit length must be non-negative");
  return eval_gamma_product(slit_p_gamma(a)) * ExactValue(Rational(1, pow2(a)));
}

inline ExactValue multi_slit_corr(const SlitSpec& spec) { return center_dipole_corr(slit_dipoles(spec)); }

// same:     omega([ox]_a,[ox]_b;2d)   / omega([ox]_{a+b})
// opposite: omega([ox]_a,[xo]_b;2d+1) / omega([ox]_a,[ox]_b;2d)
inline ExactValue slit_ratio(int a, int b, int d, Orientation o) {
  if (a < 0 || b < 0 || d < 0) throw std::invalid_argument("slit_ratio arguments must be non-negative");
  GammaProduct g;
  if (o == Orientation::same) {
    for (int i = 1; i <= a; ++i) {
      g.mul(a + b + d - i + 1, 2).mul(a - i + 1, 2).div(a + b - i + 1, 2).div(a + d - i + 1, 2);
      const Rational h(1, 2), h3(3, 2);
      g.mul(a + d - i + h).mul(a + d - i + h3).mul(a + b - i + h).mul(a + b - i + h3);
      g.div(a + b + d - i + h).div(a + b + d - i + h3).div(a - i + h).div(a - i + h3);
    }
  } else {
    const Rational h(1, 2);
    g.mul(a + b + d + 1).mul(a + d + h).mul(b + d + h).mul(d + 1);
    g.div(a + b + d + h).div(a + d + 1).div(b + d + 1).div(d + h);
  }
  return eval_gamma_product(g);
}

// omega of two slits at an arbitrary gap; orientation refers to the second slit.
inline ExactValue slit_pair_corr(int a, int b, int gap, Orientation o) {
  return multi_slit_corr(SlitSpec{{a, b}, {true, o == Orientation::same}, {gap}});
}

// Cross-slit factor: prod over cross pairs of 4D^2/(4D^2-1), D = d+i+m.
inline Rational slit_cross_factor(int a, int b, int d) {
  Rational out = 1;
  for (int i = 1; i <= b; ++i)
    for (int m = 0; m < a; ++m) {
      const BigInt D = d + i + m;
      out *= Rational(4 * D * D, 4 * D * D - 1);
    }
  return out;
}

inline long double log_slit_cross_factor(long long a, long long b, long long d) {
  detail::CompensatedSum acc;
  for (long long i = 1; i <= b; ++i)
    for (long long m = 0; m < a; ++m) {
      const long double D = static_cast<long double>(d + i + m);
      acc.add(-std::log1p(-1.0L / (4 * D * D)));
    }
  return acc.value();
}

inline long double log_slit_p(long long m) {
  detail::CompensatedSum acc;
  // t_1 = 2/pi, t_{i+1} = t_i * i^2/(i^2 - 1/4)
  long double lt = std::log(2.0L / boost::math::constants::pi<long double>());
  for (long long i = 1; i <= m; ++i) {
    acc.add(lt);
    const long double x = static_cast<long double>(i);
    lt += -std::log1p(-0.25L / (x * x));
  }
  return acc.value();
}

}  // namespace aztec
