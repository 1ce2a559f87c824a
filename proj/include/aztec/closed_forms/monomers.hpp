#pragma once

#include "aztec/exact.hpp"

#include <stdexcept>
#include <vector>

namespace aztec {

// P_a(s) = prod_{i=1}^s Gamma(i+a)^2 / (Gamma(i+a-1/2) Gamma(i+a+1/2))
inline GammaProduct p_product_gamma(const Rational& a, int s) {
  if (a <= 0) throw std::invalid_argument("p_product needs a > 0");
  GammaProduct g;
  const Rational h(1, 2);
  for (int i = 1; i <= s; ++i) g.mul(i + a, 2).div(i + a - h).div(i + a + h);
  return g;
}

inline ExactValue p_product(const Rational& a, int s) { return eval_gamma_product(p_product_gamma(a, s)); }

// Q(s,n) = prod_{i=1}^s Gamma(i) Gamma(n-i) / (Gamma(i+1/2) Gamma(n-i-1/2))
inline GammaProduct q_product_gamma(int s, const Rational& n) {
  const Rational h(1, 2);
  if (s > 0 && n - s - h <= 0) throw std::invalid_argument("q_product: non-positive Gamma argument");
  GammaProduct g;
  for (int i = 1; i <= s; ++i) g.mul(i).mul(n - i).div(i + h).div(n - i - h);
  return g;
}

inline ExactValue q_product(int s, const Rational& n) { return eval_gamma_product(q_product_gamma(s, n)); }

namespace detail {
inline void check_s_list(int n, const std::vector<int>& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 0 || s[j] > n) throw std::invalid_argument("s out of range [0,n]");
    if (j && s[j] <= s[j - 1]) throw std::invalid_argument("s list must increase strictly");
  }
}
}  // namespace detail

// Holes at 2 s_j + j on AR_{2n,2n+k}, relative to 2^{n(2n+1)}: Pochhammer product form.
inline ExactValue monomer_even_count_ratio(int n, const std::vector<int>& s) {
  detail::check_s_list(n, s);
  const int k = static_cast<int>(s.size());
  const Rational h(1, 2);
  Rational out = 1;
  for (int j = 0; j < k; ++j) {
    for (int i = 1; i <= s[j]; ++i) {
      Rational f = pochhammer(1, i - 1).as_rational() / pochhammer(Rational(3, 2), i - 1).as_rational();
      int prev = i;
      for (int m = j + 1; m <= k; ++m) {
        const int next = m < k ? s[m] : n;
        const Rational shift = Rational(m - j, 2);
        const Rational num_base = prev - i + 1 + shift;
        const Rational den_base = prev - i + h + shift;
        f *= pochhammer(num_base, next - prev).as_rational() / pochhammer(den_base, next - prev).as_rational();
        prev = next;
      }
      out *= f * f;
    }
  }
  return ExactValue(out);
}

// Same ratio through the P/Q products.
inline ExactValue monomer_even_count_ratio_pq(int n, const std::vector<int>& s) {
  detail::check_s_list(n, s);
  const int k = static_cast<int>(s.size());
  GammaProduct g;
  for (int j = 0; j < k; ++j) {
    // 1-based index j+1
    g *= q_product_gamma(s[j], n + Rational(k - (j + 1) + 3, 2));
    for (int m = j + 1; m < k; ++m) {
      const Rational a(m - j, 2);
      g *= p_product_gamma(a, s[m]);
      g *= p_product_gamma(a, s[m] - s[j]).inverse();
    }
  }
  const ExactValue v = eval_gamma_product(g);
  return v * v;
}

inline long double log_monomer_even_count_ratio(int n, const std::vector<int>& s) {
  detail::check_s_list(n, s);
  const int k = static_cast<int>(s.size());
  GammaProduct g;
  for (int j = 0; j < k; ++j) {
    g *= q_product_gamma(s[j], n + Rational(k - (j + 1) + 3, 2));
    for (int m = j + 1; m < k; ++m) {
      const Rational a(m - j, 2);
      g *= p_product_gamma(a, s[m]);
      g *= p_product_gamma(a, s[m] - s[j]).inverse();
    }
  }
  return 2 * log_eval_gamma_product(g);
}

// [Q(s,n+3/2)]^2 through hyperfactorials and even superfactorials.
inline ExactValue q_squared_hyperfactorial_form(int s, int n) {
  if (s < 0 || s > n) throw std::invalid_argument("need 0 <= s <= n");
  const Rational inner = Rational(hyperfactorial_int(s + 1) * hyperfactorial_int(n - s + 1) * hyperfactorial_int(s) *
                                      hyperfactorial_int(n - s) * even_superfactorial_int(n),
                                  hyperfactorial_int(n + 1) * hyperfactorial_int(n) * even_superfactorial_int(s) *
                                      even_superfactorial_int(n - s));
  return ExactValue(inner * inner / Rational(pow2(4UL * s * (n - s))));
}

}  // namespace aztec
