#pragma once

#include "aztec/closed_forms/dipoles.hpp"
#include "aztec/closed_forms/moves.hpp"
#include "aztec/exact.hpp"
#include "aztec/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace aztec {

namespace detail {

inline int free_between(int x, int y, const DefectCluster& d) {
  const int lo = std::min(x, y), hi = std::max(x, y);
  int count = hi - lo - 1;
  for (auto& [z, k] : d.items())
    if (z > lo && z < hi) --count;
  return count;
}

// branch 0: G((d-1)/2) G((d+1)/2) / G(d/2)^2 ; branch 1: G(d/2) G(d/2+1) / G((d+1)/2)^2
inline GammaProduct kernel_branch(int dist, int branch) {
  GammaProduct g;
  if (branch == 0) {
    if (dist <= 1) throw std::domain_error("kernel branch undefined at distance 1");
    g.mul_twice(dist - 1).mul_twice(dist + 1).div_twice(dist, 2);
  } else {
    g.mul_twice(dist).mul_twice(dist + 2).div_twice(dist + 1, 2);
  }
  return g;
}

}  // namespace detail

inline GammaProduct likes_kernel_gamma(int x, int y, const DefectCluster& d) {
  if (x == y) throw std::invalid_argument("kernel needs distinct points");
  return detail::kernel_branch(std::abs(x - y), detail::free_between(x, y, d) % 2);
}

inline GammaProduct unlikes_kernel_gamma(int x, int y, const DefectCluster& d) {
  if (x == y) throw std::invalid_argument("kernel needs distinct points");
  return detail::kernel_branch(std::abs(x - y), 1 - detail::free_between(x, y, d) % 2);
}

inline ExactValue likes_kernel(int x, int y, const DefectCluster& d) { return eval_gamma_product(likes_kernel_gamma(x, y, d)); }
inline ExactValue unlikes_kernel(int x, int y, const DefectCluster& d) {
  return eval_gamma_product(unlikes_kernel_gamma(x, y, d));
}

namespace detail {
inline void check_alpha(const Rational& alpha) {
  if (alpha <= -1 || alpha >= 1) throw std::invalid_argument("alpha must lie in (-1,1)");
}
}  // namespace detail

// omega~_alpha(cluster) / omega~_alpha(cluster with defect idx moved one unit left)
inline ExactValue alpha_move_ratio(const Rational& alpha, const DefectCluster& cl, std::size_t idx) {
  detail::check_alpha(alpha);
  const auto& items = cl.items();
  const auto [x, kind] = items.at(idx);
  if (cl.contains(x - 1)) throw std::invalid_argument("move blocked");
  const DefectCluster moved = cl.moved_left(idx);
  GammaProduct g;
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (j == idx) continue;
    const auto [y, ky] = items[j];
    // unlike pairs enter on the opposite side of the fraction from like pairs
    if (ky == kind) {
      g *= y < x ? likes_kernel_gamma(x, y, cl) : likes_kernel_gamma(x - 1, y, moved).inverse();
    } else {
      g *= y < x ? unlikes_kernel_gamma(x, y, cl).inverse() : unlikes_kernel_gamma(x - 1, y, moved);
    }
  }
  const Rational r = kind == DefectKind::hole ? (1 - alpha) / (1 + alpha) : (1 + alpha) / (1 - alpha);
  return ExactValue::sqrt_of(r) * eval_gamma_product(g);
}

// The alpha-dependent factor of a unit right translation of a charge-q cluster.
inline ExactValue alpha_translation_factor(const Rational& alpha, int q) {
  detail::check_alpha(alpha);
  return ExactValue::sqrt_of((1 - alpha) / (1 + alpha)).pow(q);
}

namespace detail {

// omega~(cl) / omega~(cl packed onto base, base+1, ...)
inline ExactValue alpha_packing_ratio(const Rational& alpha, DefectCluster cl, int base, MoveOrder order) {
  const std::size_t m = cl.size();
  ExactValue acc(1);
  auto pos = [&](std::size_t i) { return cl.items()[i].first; };
  auto target = [&](std::size_t i) { return base + static_cast<int>(i); };
  for (std::size_t i = 0; i < m; ++i)
    if (pos(i) < target(i)) throw std::invalid_argument("packing base lies right of a defect");
  auto step = [&](std::size_t i) {
    acc *= alpha_move_ratio(alpha, cl, i);
    cl = cl.moved_left(i);
  };
  if (order == MoveOrder::leftmost_first) {
    for (std::size_t i = 0; i < m; ++i)
      while (pos(i) > target(i)) step(i);
  } else {
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (pos(i) == target(i)) continue;
        if (i && pos(i - 1) == pos(i) - 1) continue;
        step(i);
        moved = true;
      }
    }
  }
  return acc;
}

}  // namespace detail

// omega~_alpha(to) / omega~_alpha(from) along leftward elementary moves through a common packed cluster.
inline ExactValue alpha_corr_ratio(const Rational& alpha, const DefectCluster& from, const DefectCluster& to,
                                   MoveOrder order = MoveOrder::leftmost_first) {
  detail::check_alpha(alpha);
  if (from.holes().size() != to.holes().size() || from.seps().size() != to.seps().size())
    throw std::invalid_argument("clusters have different defect counts");
  if (from.kind_sequence() != to.kind_sequence())
    throw std::invalid_argument("no elementary-move path: kind sequences differ");
  if (from.size() == 0) return ExactValue(1);
  const int base = std::min(from.items().front().first, to.items().front().first);
  return detail::alpha_packing_ratio(alpha, to, base, order) / detail::alpha_packing_ratio(alpha, from, base, order);
}

// omega-bar(O1) omega-bar(O2) / omega-bar(O1, O2) for neutral dipole clusters.
inline ExactValue neutral_cluster_limit(const std::vector<Dipole>& o1, const std::vector<Dipole>& o2) {
  std::vector<Dipole> both = o1;
  both.insert(both.end(), o2.begin(), o2.end());
  return center_dipole_corr(o1) * center_dipole_corr(o2) / center_dipole_corr(both);
}

}  // namespace aztec
