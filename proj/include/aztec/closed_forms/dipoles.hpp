#pragma once

#include "aztec/exact.hpp"
#include "aztec/lattice.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

namespace aztec {

// Square of the Coulomb-style interaction function.
inline Rational e_squared_rational(const std::vector<int>& holes, const std::vector<int>& seps) {
  std::set<int> all;
  for (int x : holes)
    if (!all.insert(x).second) throw std::invalid_argument("coincident points in e_squared");
  for (int x : seps)
    if (!all.insert(x).second) throw std::invalid_argument("coincident points in e_squared");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j) num *= std::abs(holes[i] - holes[j]);
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j) num *= std::abs(seps[i] - seps[j]);
  for (int a : holes)
    for (int b : seps) den *= std::abs(a - b);
  return Rational(num, den);
}

inline ExactValue e_squared(const std::vector<int>& holes, const std::vector<int>& seps) {
  return ExactValue(e_squared_rational(holes, seps));
}

inline ExactValue e_value(const std::vector<int>& holes, const std::vector<int>& seps) {
  return ExactValue::sqrt_of(e_squared_rational(holes, seps));
}

inline long double log_e_squared(const std::vector<int>& holes, const std::vector<int>& seps) {
  detail::CompensatedSum acc;
  auto lg = [](int d) { return std::log(static_cast<long double>(std::abs(d))); };
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j) acc.add(lg(holes[i] - holes[j]));
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j) acc.add(lg(seps[i] - seps[j]));
  for (int a : holes)
    for (int b : seps) acc.add(-lg(a - b));
  return acc.value();
}

inline ExactValue dipole_corr(int n, const Dipole& d) {
  if (d.left() < 1 || d.right() > 2 * n) throw std::invalid_argument("dipole out of range for n");
  const Rational h(1, 2);
  auto poch = [](const Rational& a, int m) { return pochhammer(a, static_cast<unsigned>(m)); };
  const int s = d.s;
  switch (d.kind) {
    case Dipole::Kind::hole_sep_odd:
      return poch(h, s + 1) * poch(h, n - s - 1) / (poch(1, s) * poch(1, n - s - 1));
    case Dipole::Kind::hole_sep_even:
      return poch(h, s) * poch(h, n - s) / (poch(1, s - 1) * poch(1, n - s));
    case Dipole::Kind::sep_hole_even:
    case Dipole::Kind::sep_hole_odd:
      return poch(h, s) * poch(h, n - s) / (poch(1, s) * poch(1, n - s - 1));
  }
  return ExactValue(0);
}

namespace detail {
inline void split_flavours(const std::vector<Dipole>& ds, std::vector<int> (&holes)[2], std::vector<int> (&seps)[2]) {
  for (const auto& d : ds) {
    const int f = d.odd() ? 0 : 1;
    holes[f].push_back(d.hole());
    seps[f].push_back(d.sep());
  }
}
}  // namespace detail

inline ExactValue dipole_family_corr(int n, const std::vector<Dipole>& ds) {
  check_disjoint(ds);
  ExactValue out(1);
  for (const auto& d : ds) out *= dipole_corr(n, d);
  std::vector<int> holes[2], seps[2];
  detail::split_flavours(ds, holes, seps);
  return out * ExactValue(e_squared_rational(holes[0], seps[0]) * e_squared_rational(holes[1], seps[1]));
}

// Omega_{2n}(D1,D2) = omega(D1,D2) - omega(D1) omega(D2), from the pair closed forms.
inline ExactValue dipole_gap(int n, Dipole d1, Dipole d2) {
  check_disjoint({d1, d2});
  if (d1.odd() != d2.odd()) return ExactValue(0);
  if (d1.left() > d2.left()) std::swap(d1, d2);
  const ExactValue ww = dipole_corr(n, d1) * dipole_corr(n, d2);
  const int hd = d2.hole() - d1.hole();  // even
  if (d1.sign() == d2.sign()) return ww * ExactValue(Rational(1, (hd - 1) * (hd + 1)));
  if (d1.sign() > 0) return -(ww * ExactValue(Rational(1, (hd - 1) * (hd - 1))));
  return -(ww * ExactValue(Rational(1, (hd + 1) * (hd + 1))));
}

inline ExactValue bulk_dipole_corr(const std::vector<Rational>& alphas, const std::vector<std::vector<Dipole>>& collections) {
  if (alphas.size() != collections.size()) throw std::invalid_argument("one alpha per collection");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] <= 0 || alphas[i] >= 2) throw std::invalid_argument("alpha outside (0,2)");
    if (i && alphas[i] <= alphas[i - 1]) throw std::invalid_argument("alphas must increase");
  }
  ExactValue out(1);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const auto& ds = collections[i];
    check_disjoint(ds);
    const Rational ratio = alphas[i] / (2 - alphas[i]);
    int eps = 0;
    for (const auto& d : ds) eps += d.sign();
    const ExactValue radical = ExactValue::sqrt_of(eps >= 0 ? ratio : 1 / ratio).pow(std::abs(eps));
    std::vector<int> holes[2], seps[2];
    detail::split_flavours(ds, holes, seps);
    out *= ExactValue::pi_power(-2 * static_cast<int>(ds.size())) * radical *
           ExactValue(e_squared_rational(holes[0], seps[0]) * e_squared_rational(holes[1], seps[1]));
  }
  return out;
}

// (2D)^2 / ((2D-1)(2D+1)) for hole distance 2D between like-oriented dipoles.
inline Rational center_pair_factor(int hole_distance) {
  const BigInt h = hole_distance;
  return Rational(h * h, (h - 1) * (h + 1));
}

inline ExactValue center_dipole_corr(const std::vector<Dipole>& ds) {
  check_disjoint(ds);
  std::vector<int> holes[2], seps[2];
  detail::split_flavours(ds, holes, seps);
  return ExactValue::pi_power(-2 * static_cast<int>(ds.size())) *
         ExactValue(e_squared_rational(holes[0], seps[0]) * e_squared_rational(holes[1], seps[1]));
}

inline long double log_center_dipole_corr(const std::vector<Dipole>& ds) {
  std::vector<int> holes[2], seps[2];
  detail::split_flavours(ds, holes, seps);
  const long double lpi = std::log(boost::math::constants::pi<long double>());
  return -lpi * static_cast<long double>(ds.size()) + log_e_squared(holes[0], seps[0]) +
         log_e_squared(holes[1], seps[1]);
}

}  // namespace aztec
