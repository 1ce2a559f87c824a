#pragma once

#include "aztec/exact.hpp"
#include "aztec/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace aztec {

// Two runs of holes: 2p starting at 2k+1, then 2q starting at 2(k+p+l)+1.
struct BarConfig {
  int n = 1, k = 0, l = 0, p = 0, q = 0;

  void validate() const {
    if (n < 1 || k < 0 || l < 0 || p < 0 || q < 0) throw std::invalid_argument("bar parameters must be non-negative, n positive");
    if (k + l > n) throw std::invalid_argument("bars need k+l <= n");
  }
  DefectConfig config() const {
    validate();
    DefectConfig c{n, {}, {}};
    for (int j = 2 * k + 1; j <= 2 * k + 2 * p; ++j) c.holes.push_back(j);
    const int start = 2 * (k + p + l);
    for (int j = start + 1; j <= start + 2 * q; ++j) c.holes.push_back(j);
    c.validate();
    return c;
  }
};

inline GammaProduct bars_gamma(const BarConfig& b) {
  b.validate();
  const int n = b.n, k = b.k, l = b.l, p = b.p, q = b.q;
  GammaProduct g;
  for (int i = 1; i <= k; ++i) {
    g.mul(i, 2).mul(n + p + q - i + 1, 2).div(p + i, 2).div(n + q - i + 1, 2);
    g.mul(p + l + i, 2).mul(q + l + i, 2).div(l + i, 2).div(p + q + l + i, 2);
  }
  for (int i = 1; i <= k + l; ++i) g.mul(i, 2).mul(n + q - i + 1, 2).div(q + i, 2).div(n - i + 1, 2);
  return g;
}

inline BigInt bars_count(const BarConfig& b) {
  const Rational r = eval_gamma_product(bars_gamma(b)).as_rational() *
                     Rational(pow2(static_cast<unsigned long>(b.n) * (2 * b.n + 1)));
  if (denom(r) != 1) throw std::logic_error("bars_count produced a non-integer");
  return numer(r);
}

// Hyperfactorial form of the same count divided by 2^{n(2n+1)}.
inline Rational bars_ratio_hyperfactorial(const BarConfig& b) {
  b.validate();
  const int n = b.n, k = b.k, l = b.l, p = b.p, q = b.q;
  auto H = [](int x) { return hyperfactorial_int(static_cast<unsigned>(x)); };
  const BigInt num = H(k) * H(l) * H(p) * H(q) * H(n - k - l) * H(k + l + p) * H(l + p + q) * H(n + q - k) * H(n + p + q);
  const BigInt den = H(n) * H(k + p) * H(l + p) * H(l + q) * H(n + q - k - l) * H(k + l + p + q) * H(n + p + q - k);
  const Rational r(num, den);
  return r * r;
}

inline long double log_bars_count(const BarConfig& b) {
  return log_eval_gamma_product(bars_gamma(b)) +
         static_cast<long double>(b.n) * (2 * b.n + 1) * std::log(2.0L);
}

// Recognise a holes-only config as two even bars on odd starts.
inline std::optional<BarConfig> as_bar_config(const DefectConfig& c) {
  if (!c.seps.empty()) return std::nullopt;
  std::vector<std::pair<int, int>> runs;  // (start, length)
  for (int h : c.holes) {
    if (!runs.empty() && runs.back().first + runs.back().second == h)
      ++runs.back().second;
    else
      runs.emplace_back(h, 1);
  }
  for (auto [start, len] : runs)
    if (start % 2 == 0 || len % 2) return std::nullopt;
  BarConfig b;
  b.n = c.n;
  if (runs.empty()) return b;
  if (runs.size() > 2) return std::nullopt;
  b.k = (runs[0].first - 1) / 2;
  b.p = runs[0].second / 2;
  if (runs.size() == 2) {
    b.q = runs[1].second / 2;
    b.l = (runs[1].first - 1) / 2 - b.k - b.p;
  }
  if (b.k + b.l > b.n) return std::nullopt;
  return b;
}

}  // namespace aztec
