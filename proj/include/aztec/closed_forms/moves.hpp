#pragma once

#include "aztec/closed_forms/bars.hpp"
#include "aztec/closed_forms/dipoles.hpp"
#include "aztec/exact.hpp"
#include "aztec/lattice.hpp"
#include "aztec/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aztec {

struct unsupported_instance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Axis labels left to right; holes skipped, separations listed twice.
inline std::vector<int> slots(int width, const std::vector<int>& holes, const std::vector<int>& seps) {
  std::vector<int> out;
  for (int j = 1; j <= width; ++j) {
    if (std::binary_search(holes.begin(), holes.end(), j)) continue;
    out.push_back(j);
    if (std::binary_search(seps.begin(), seps.end(), j)) out.push_back(j);
  }
  return out;
}

// skip one, land on the next, and so on
inline void every_other(const std::vector<int>& walk, std::set<int>& into) {
  for (std::size_t i = 1; i < walk.size(); i += 2) into.insert(walk[i]);
}

inline void check_movable(const DefectConfig& c, int x) {
  if (x <= 1) throw std::invalid_argument("defect at label 1 cannot move left");
  if (c.occupied(x - 1)) throw std::invalid_argument("move blocked at label " + std::to_string(x - 1));
}

using Factors = std::vector<std::pair<long long, long long>>;

inline Rational product_of(const Factors& f) {
  BigInt num = 1, den = 1;
  for (auto [a, b] : f) {
    num *= a;
    den *= b;
  }
  return Rational(num, den);
}

inline long double log_product_of(const Factors& f) {
  CompensatedSum acc;
  for (auto [a, b] : f) acc.add(std::log(static_cast<long double>(a)) - std::log(static_cast<long double>(b)));
  return acc.value();
}

}  // namespace detail

inline std::vector<int> jump_set_hole(const DefectConfig& c, std::size_t i) {
  c.validate();
  const int a = c.holes.at(i);
  const auto sl = detail::slots(c.width(), c.holes, c.seps);
  std::vector<int> right, left;
  for (int x : sl)
    if (x > a) right.push_back(x);
  for (auto it = sl.rbegin(); it != sl.rend(); ++it)
    if (*it < a - 1) left.push_back(*it);
  std::set<int> s;
  detail::every_other(right, s);
  detail::every_other(left, s);
  s.erase(a);
  s.erase(a - 1);
  return {s.begin(), s.end()};
}

inline std::vector<int> jump_set_sep(const DefectConfig& c, std::size_t i) {
  c.validate();
  const int b = c.seps.at(i);
  // right walk starts on the second copy of b
  std::vector<int> right{b};
  for (int x : detail::slots(c.width(), c.holes, c.seps))
    if (x > b) right.push_back(x);
  // left walk in the moved configuration starts on the second copy of b-1
  auto moved = c.seps;
  moved[i] = b - 1;
  std::vector<int> left{b - 1};
  const auto sl = detail::slots(c.width(), c.holes, moved);
  for (auto it = sl.rbegin(); it != sl.rend(); ++it)
    if (*it < b - 1) left.push_back(*it);
  std::set<int> s;
  detail::every_other(right, s);
  detail::every_other(left, s);
  s.erase(b);
  s.erase(b - 1);
  return {s.begin(), s.end()};
}

inline detail::Factors move_hole_factors(const DefectConfig& c, std::size_t i) {
  const int a = c.holes.at(i);
  detail::check_movable(c, a);
  detail::Factors f;
  for (int j : jump_set_hole(c, i)) f.emplace_back(std::abs(a - 1 - j), std::abs(a - j));
  return f;
}

inline detail::Factors move_sep_factors(const DefectConfig& c, std::size_t i) {
  const int b = c.seps.at(i);
  detail::check_movable(c, b);
  detail::Factors f;
  for (int j : jump_set_sep(c, i)) f.emplace_back(std::abs(b - j), std::abs(b - 1 - j));
  return f;
}

// M(c) / M(c with hole i moved one unit left)
inline ExactValue move_hole_ratio(const DefectConfig& c, std::size_t i) {
  return ExactValue(detail::product_of(move_hole_factors(c, i)));
}
inline ExactValue move_sep_ratio(const DefectConfig& c, std::size_t i) {
  return ExactValue(detail::product_of(move_sep_factors(c, i)));
}
inline long double log_move_hole_ratio(const DefectConfig& c, std::size_t i) {
  return detail::log_product_of(move_hole_factors(c, i));
}
inline long double log_move_sep_ratio(const DefectConfig& c, std::size_t i) {
  return detail::log_product_of(move_sep_factors(c, i));
}

// Closed form of
//   [M(H,S) / M(H - a1 + (a1-1), S)] / [M'(H - a1, S + a1) / M'(H - a1, S + (a1-1))]
// with M' on height 2n+2. a1 is the leftmost hole and a1-1 is free.
inline ExactValue hole_to_sep_ratio(const DefectConfig& c) {
  c.validate();
  if (c.holes.empty()) throw std::invalid_argument("hole_to_sep_ratio needs a hole");
  const int a1 = c.holes.front();
  detail::check_movable(c, a1);
  const long long w = c.width();
  BigInt num = std::abs(a1 - 1 - w), den = a1 - 1;
  for (std::size_t j = 1; j < c.holes.size(); ++j) {
    num *= std::abs(a1 - c.holes[j]);
    den *= std::abs(a1 - 1 - c.holes[j]);
  }
  for (int b : c.seps) {
    num *= std::abs(a1 - 1 - b);
    den *= std::abs(a1 - b);
  }
  return ExactValue(Rational(num, den));
}

enum class MoveOrder { leftmost_first, round_robin };

namespace detail {

// Moves every defect of c left so that defect i (axis order) lands on target[i];
// returns the product of M(before)/M(after) over the path and the final config.
template <class Acc, class Step>
Acc chain_left(DefectConfig c, const std::vector<int>& target, MoveOrder order, Acc acc, Step step,
               DefectConfig* final_config = nullptr) {
  auto ds = c.defects();
  if (ds.size() != target.size()) throw std::invalid_argument("target size mismatch");
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (target[i] > ds[i].first) throw std::invalid_argument("chain targets must lie to the left");
  auto move_one = [&](std::size_t idx) {
    auto [x, kind] = ds[idx];
    if (kind == DefectKind::hole) {
      const std::size_t hi = std::lower_bound(c.holes.begin(), c.holes.end(), x) - c.holes.begin();
      acc = step(acc, c, hi, kind);
      c.holes[hi] = x - 1;
    } else {
      const std::size_t si = std::lower_bound(c.seps.begin(), c.seps.end(), x) - c.seps.begin();
      acc = step(acc, c, si, kind);
      c.seps[si] = x - 1;
    }
    ds[idx].first = x - 1;
  };
  if (order == MoveOrder::leftmost_first) {
    for (std::size_t idx = 0; idx < ds.size(); ++idx)
      while (ds[idx].first > target[idx]) move_one(idx);
  } else {
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t idx = 0; idx < ds.size(); ++idx) {
        if (ds[idx].first == target[idx]) continue;
        if (idx && ds[idx - 1].first == ds[idx].first - 1) continue;
        move_one(idx);
        moved = true;
      }
    }
  }
  if (final_config) *final_config = c;
  return acc;
}

inline Rational exact_step(const Rational& acc, const DefectConfig& c, std::size_t i, DefectKind k) {
  return acc * product_of(k == DefectKind::hole ? move_hole_factors(c, i) : move_sep_factors(c, i));
}
inline long double log_step(long double acc, const DefectConfig& c, std::size_t i, DefectKind k) {
  return acc + log_product_of(k == DefectKind::hole ? move_hole_factors(c, i) : move_sep_factors(c, i));
}

inline std::vector<int> packed_targets(std::size_t m) {
  std::vector<int> t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = static_cast<int>(i) + 1;
  return t;
}

}  // namespace detail

// M(c) / M(c with defects packed onto 1..k+l, same kind order)
inline Rational packing_ratio(const DefectConfig& c, MoveOrder order = MoveOrder::leftmost_first,
                              DefectConfig* packed = nullptr) {
  return detail::chain_left(c, detail::packed_targets(c.holes.size() + c.seps.size()), order, Rational(1),
                            detail::exact_step, packed);
}

inline long double log_packing_ratio(const DefectConfig& c, MoveOrder order = MoveOrder::leftmost_first,
                                     DefectConfig* packed = nullptr) {
  return detail::chain_left(c, detail::packed_targets(c.holes.size() + c.seps.size()), order, 0.0L,
                            detail::log_step, packed);
}

enum class CountPath { diamond, bars, hole_chain, dipole_family, dipole_base_chain, oracle };

inline std::string path_name(CountPath p) {
  switch (p) {
    case CountPath::diamond: return "diamond";
    case CountPath::bars: return "bars";
    case CountPath::hole_chain: return "hole-chain";
    case CountPath::dipole_family: return "dipole-family";
    case CountPath::dipole_base_chain: return "dipole-base-chain";
    case CountPath::oracle: return "oracle";
  }
  return "?";
}

struct ExactCount {
  BigInt value;
  CountPath path;
};

inline bool alternating_pairs(const DefectConfig& c) {
  auto ds = c.defects();
  if (ds.size() % 2) return false;
  for (std::size_t i = 0; i < ds.size(); i += 2)
    if (ds[i].second == ds[i + 1].second) return false;
  return true;
}

namespace detail {
inline BigInt to_count(const Rational& r) {
  if (denom(r) != 1) throw std::logic_error("closed form produced a non-integer count");
  return numer(r);
}
}  // namespace detail

inline ExactCount count_exact(const DefectConfig& c, const OracleOptions& opt = {},
                              MoveOrder order = MoveOrder::leftmost_first) {
  c.validate();
  const Rational base = Rational(diamond_count(c.n));
  if (c.holes.empty() && c.seps.empty()) return {diamond_count(c.n), CountPath::diamond};
  if (c.seps.empty()) {
    if (auto b = as_bar_config(c)) return {bars_count(*b), CountPath::bars};
    // holes packed on 1..k leave a forced region and a diamond
    return {detail::to_count(base * packing_ratio(c, order)), CountPath::hole_chain};
  }
  if (c.k() == c.l()) {
    std::vector<Dipole> ds;
    if (dipole_decompose(c, ds))
      return {detail::to_count(base * dipole_family_corr(c.n, ds).as_rational()), CountPath::dipole_family};
    if (alternating_pairs(c)) {
      DefectConfig packed;
      const Rational r = packing_ratio(c, order, &packed);
      std::vector<Dipole> pds;
      if (!dipole_decompose(packed, pds)) throw std::logic_error("packed base is not dipole-decomposable");
      return {detail::to_count(base * dipole_family_corr(c.n, pds).as_rational() * r), CountPath::dipole_base_chain};
    }
  }
  if (c.n <= opt.max_n) return {count_matchings(c, opt).value, CountPath::oracle};
  throw unsupported_instance("no closed-form family covers this configuration and n exceeds the oracle cap");
}

}  // namespace aztec
