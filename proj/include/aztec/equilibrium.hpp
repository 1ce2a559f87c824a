#pragma once

#include "aztec/asymptotics.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace aztec {

// s bars with length fractions gammas; alphas are the s gaps left of each bar.
// The last gap is 1 - sum(alphas).
struct BarSystem {
  std::vector<long double> gammas, alphas;

  std::size_t size() const { return gammas.size(); }
  long double last_gap() const { return 1 - std::accumulate(alphas.begin(), alphas.end(), 0.0L); }

  void validate() const {
    if (gammas.empty()) throw std::invalid_argument("need at least one bar");
    if (alphas.size() != gammas.size()) throw std::invalid_argument("one gap per bar");
    for (long double g : gammas)
      if (!(g > 0)) throw std::invalid_argument("bar lengths must be positive");
    for (long double a : alphas)
      if (!(a > 0)) throw std::invalid_argument("gaps must be positive");
    if (!(last_gap() > 0)) throw std::invalid_argument("gaps must sum to less than 1");
  }

  // 0, then start and end of each bar, then 1 + sum(gammas)
  std::vector<long double> points() const {
    std::vector<long double> p{0};
    long double x = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      x += alphas[i];
      p.push_back(x);
      x += gammas[i];
      p.push_back(x);
    }
    p.push_back(1 + std::accumulate(gammas.begin(), gammas.end(), 0.0L));
    return p;
  }

  // mirror image: gaps and bars in reverse order
  BarSystem reflected() const {
    BarSystem r;
    r.gammas.assign(gammas.rbegin(), gammas.rend());
    r.alphas.push_back(last_gap());
    for (std::size_t i = size(); i-- > 1;) r.alphas.push_back(alphas[i]);
    return r;
  }
};

inline long double f_value(const BarSystem& sys) {
  sys.validate();
  return iset_sum(sys.points(), x2logx);
}

inline std::vector<long double> f_gradient(const BarSystem& sys) {
  sys.validate();
  const auto p = sys.points();
  const std::size_t s = sys.size(), m = p.size();
  std::vector<long double> g(s, 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      const long double x = p[v] - p[u];
      const long double w = ((v - u - 1) % 2 == 0 ? 1 : -1) * (2 * x * std::log(x) + x);
      // point j moves with alpha_i iff 2i+1 <= j <= 2s (0-based i)
      for (std::size_t i = 0; i < s; ++i) {
        const int dv = v >= 2 * i + 1 && v <= 2 * s, du = u >= 2 * i + 1 && u <= 2 * s;
        if (dv != du) g[i] += (dv - du) * w;
      }
    }
  return g;
}

inline long double norm2(const std::vector<long double>& v) {
  long double s = 0;
  for (long double x : v) s += x * x;
  return std::sqrt(s);
}

// Central-difference gradient, step h.
inline std::vector<long double> f_gradient_fd(const BarSystem& sys, long double h = 1e-6L) {
  std::vector<long double> g(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    BarSystem a = sys, b = sys;
    a.alphas[i] += h;
    b.alphas[i] -= h;
    g[i] = (f_value(a) - f_value(b)) / (2 * h);
  }
  return g;
}

inline Eigen::MatrixXd f_hessian_fd(const BarSystem& sys, long double h = 1e-5L) {
  const std::size_t s = sys.size();
  Eigen::MatrixXd H(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    BarSystem a = sys, b = sys;
    a.alphas[i] += h;
    b.alphas[i] -= h;
    const auto ga = f_gradient(a), gb = f_gradient(b);
    for (std::size_t j = 0; j < s; ++j) H(j, i) = static_cast<double>((ga[j] - gb[j]) / (2 * h));
  }
  return (H + H.transpose()) / 2;
}

inline std::vector<double> hessian_eigenvalues(const BarSystem& sys) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f_hessian_fd(sys));
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

struct nonconvergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct multistart_disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EquilibriumOptions {
  long double margin = 1e-6L;
  long double grad_tol = 1e-10L;
  long double agree_tol = 1e-8L;
  int max_iter = 20000;
  int random_starts = 8;
  std::uint64_t seed = 20240601;
};

namespace detail {

// Euclidean projection onto {x_i >= lo, sum x <= hi}.
inline std::vector<long double> project_simplex(std::vector<long double> x, long double lo, long double hi) {
  for (auto& v : x) v = std::max(v, lo);
  const long double total = std::accumulate(x.begin(), x.end(), 0.0L);
  if (total <= hi) return x;
  // shift y = x - lo onto {y >= 0, sum y = hi - n lo}
  const std::size_t n = x.size();
  const long double cap = hi - n * lo;
  std::vector<long double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - lo;
  std::vector<long double> u = y;
  std::sort(u.rbegin(), u.rend());
  long double css = 0, theta = 0;
  for (std::size_t j = 0; j < n; ++j) {
    css += u[j];
    const long double t = (css - cap) / (j + 1);
    if (u[j] - t > 0) theta = t;
  }
  for (std::size_t i = 0; i < n; ++i) x[i] = std::max(y[i] - theta, 0.0L) + lo;
  return x;
}

struct AscentResult {
  std::vector<long double> alphas;
  int iterations = 0;
  long double grad_norm = 0;
};

inline AscentResult ascend(const std::vector<long double>& gammas, std::vector<long double> x,
                           const EquilibriumOptions& opt) {
  const long double lo = opt.margin, hi = 1 - opt.margin;
  auto sys_at = [&](const std::vector<long double>& a) { return BarSystem{gammas, a}; };
  x = project_simplex(x, lo, hi);
  long double fx = f_value(sys_at(x));
  auto g = f_gradient(sys_at(x));
  long double step = 1e-2L;
  std::vector<long double> xprev, gprev;
  for (int it = 0; it < opt.max_iter; ++it) {
    const long double gn = norm2(g);
    if (gn < opt.grad_tol) return {x, it, gn};
    if (!xprev.empty()) {
      // Barzilai-Borwein step for ascent on a concave-looking surface
      long double ss = 0, sy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const long double si = x[i] - xprev[i], yi = g[i] - gprev[i];
        ss += si * si;
        sy += si * yi;
      }
      step = sy < 0 ? -ss / sy : 1e-2L;
    }
    std::vector<long double> xn;
    long double fn = 0;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      xn = x;
      for (std::size_t i = 0; i < x.size(); ++i) xn[i] += step * g[i];
      xn = project_simplex(xn, lo, hi);
      fn = f_value(sys_at(xn));
      long double dot = 0;
      for (std::size_t i = 0; i < x.size(); ++i) dot += g[i] * (xn[i] - x[i]);
      // slack of a few ulps so steps below F's resolution are not rejected
      if (fn >= fx + 1e-4L * dot - 64 * std::numeric_limits<long double>::epsilon() * (1 + std::fabs(fx))) {
        accepted = true;
        break;
      }
      // near the optimum F's rounding noise swamps the increase; fall back on the
      // analytic slope at the trial point (still uphill => not past the maximum)
      if (dot > 0 && gn < 1e-6L) {
        const auto gt = f_gradient(sys_at(xn));
        long double slope = 0;
        for (std::size_t i = 0; i < x.size(); ++i) slope += gt[i] * (xn[i] - x[i]);
        if (slope >= 0) {
          accepted = true;
          break;
        }
      }
      step /= 2;
    }
    if (!accepted) {
      throw nonconvergence_error("line search stalled at gradient norm " + std::to_string(static_cast<double>(gn)));
    }
    xprev = x;
    gprev = g;
    x = xn;
    fx = fn;
    g = f_gradient(sys_at(x));
  }
  throw nonconvergence_error("iteration cap reached");
}

inline std::vector<long double> random_interior(std::size_t s, std::mt19937_64& rng, long double margin) {
  std::exponential_distribution<double> e(1.0);
  std::vector<long double> w(s + 1);
  for (auto& v : w) v = e(rng);
  const long double t = std::accumulate(w.begin(), w.end(), 0.0L);
  std::vector<long double> x(s);
  for (std::size_t i = 0; i < s; ++i) x[i] = margin + (1 - (s + 2) * margin) * w[i] / t;
  return x;
}

}  // namespace detail

struct EquilibriumResult {
  BarSystem system;
  long double f = 0;
  long double grad_norm = 0;
  std::vector<double> hessian_eigs;
  std::vector<std::vector<long double>> starts_converged;  // barycentric start first
  long double max_disagreement = 0;
};

inline EquilibriumResult find_equilibrium(const std::vector<long double>& gammas, const EquilibriumOptions& opt = {}) {
  for (long double g : gammas)
    if (!(g > 0)) throw std::invalid_argument("bar lengths must be positive");
  if (gammas.empty()) throw std::invalid_argument("need at least one bar");
  const std::size_t s = gammas.size();
  EquilibriumResult res;
  std::vector<long double> bary(s, (1 - opt.margin) / (s + 1));
  auto best = detail::ascend(gammas, bary, opt);
  res.starts_converged.push_back(best.alphas);
  std::mt19937_64 rng(opt.seed);
  for (int r = 0; r < opt.random_starts; ++r) {
    auto other = detail::ascend(gammas, detail::random_interior(s, rng, opt.margin), opt);
    long double d = 0;
    for (std::size_t i = 0; i < s; ++i) d = std::max(d, std::fabs(other.alphas[i] - best.alphas[i]));
    res.max_disagreement = std::max(res.max_disagreement, d);
    res.starts_converged.push_back(other.alphas);
  }
  if (res.max_disagreement > opt.agree_tol)
    throw multistart_disagreement("multi-start maxima disagree by " +
                                  std::to_string(static_cast<double>(res.max_disagreement)));
  res.system = BarSystem{gammas, best.alphas};
  res.f = f_value(res.system);
  res.grad_norm = norm2(f_gradient(res.system));
  res.hessian_eigs = hessian_eigenvalues(res.system);
  return res;
}

struct Displacement {
  long double lambda = 0;          // F(sys0) - F(sys)
  long double log_likelihood = 0;  // -n^2 lambda
};

inline Displacement displacement_likelihood(const BarSystem& sys, const BarSystem& sys0, long double n) {
  if (sys.gammas != sys0.gammas) throw std::invalid_argument("systems must share bar lengths");
  Displacement d;
  d.lambda = f_value(sys0) - f_value(sys);
  d.log_likelihood = -n * n * d.lambda;
  return d;
}

inline nlohmann::json equilibrium_report(const EquilibriumResult& r) {
  auto to_d = [](const std::vector<long double>& v) {
    std::vector<double> out;
    for (long double x : v) out.push_back(static_cast<double>(x));
    return out;
  };
  nlohmann::json j;
  j["schema"] = "1";
  j["gammas"] = to_d(r.system.gammas);
  j["alphas"] = to_d(r.system.alphas);
  j["F"] = static_cast<double>(r.f);
  j["grad_norm"] = static_cast<double>(r.grad_norm);
  j["hessian_eigs"] = r.hessian_eigs;
  return j;
}

}  // namespace aztec
