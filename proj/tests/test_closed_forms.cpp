#include "aztec/closed_forms.hpp"
#include "aztec/oracle.hpp"
#include "aztec/verify.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace aztec;

namespace {
ExactValue q(long long a, long long b = 1) { return ExactValue(Rational(a, b)); }
ExactValue inv_pi(int k) { return ExactValue::pi_power(-2 * k); }
Dipole D(int hole, int sep) { return Dipole::from_positions(hole, sep); }
}  // namespace

TEST_CASE("e_squared", "[closed-forms]") {
  CHECK(e_squared({1}, {2}) == q(1));
  CHECK(e_squared({1, 3}, {}) == q(2));
  CHECK(e_squared({1, 5}, {2, 6}) == q(16, 15));
  CHECK(e_value({1, 3}, {}) == ExactValue::sqrt_of(2));
  CHECK_THROWS(e_squared({1, 1}, {}));
  CHECK_THROWS(e_squared({1}, {1}));
}

TEST_CASE("dipole_corr", "[closed-forms]") {
  CHECK(dipole_corr(1, D(1, 2)) == q(1, 2));
  CHECK(dipole_corr(2, D(1, 2)) == q(1, 4));
  CHECK(dipole_corr(2, D(3, 4)) == q(3, 4));
  CHECK_THROWS(dipole_corr(1, D(3, 4)));
}

TEST_CASE("dipole_corr matches the oracle for every single dipole (2n <= 8)", "[closed-forms][oracle]") {
  for (int n = 1; n <= 4; ++n)
    for (int h = 1; h <= 2 * n; ++h)
      for (int s : {h - 1, h + 1}) {
        if (s < 1 || s > 2 * n) continue;
        CHECK(dipole_corr(n, D(h, s)) == corr_finite(make_config(n, {h}, {s})));
      }
}

TEST_CASE("dipole_family_corr", "[closed-forms]") {
  CHECK(dipole_family_corr(2, {D(1, 2), D(3, 4)}) == q(1, 4));
  CHECK(dipole_family_corr(1, {D(1, 2)}) == q(1, 2));
  // odd with even: no cross factor
  const auto odd = D(1, 2), even = D(4, 5);
  CHECK(dipole_family_corr(3, {odd, even}) == dipole_corr(3, odd) * dipole_corr(3, even));
  CHECK_THROWS(dipole_family_corr(3, {D(1, 2), D(2, 1)}));
}

TEST_CASE("dipole_gap against oracle differences (n = 3)", "[closed-forms][oracle]") {
  const int n = 3;
  std::vector<Dipole> all;
  for (int h = 1; h <= 2 * n; ++h)
    for (int s : {h - 1, h + 1})
      if (s >= 1 && s <= 2 * n) all.push_back(D(h, s));
  int checked = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& a = all[i];
      const auto& b = all[j];
      if (a.right() >= b.left() && b.right() >= a.left()) continue;
      const auto pair = corr_finite(config_from_dipoles(n, {a, b}));
      const auto single = corr_finite(config_from_dipoles(n, {a})) * corr_finite(config_from_dipoles(n, {b}));
      CHECK(dipole_gap(n, a, b) == pair - single);
      ++checked;
    }
  CHECK(checked > 20);
}

TEST_CASE("dipole_gap closed-form shapes", "[closed-forms]") {
  const int n = 4;
  const auto a = D(1, 2), b = D(3, 4);
  CHECK(dipole_gap(n, a, b) == dipole_corr(n, a) * dipole_corr(n, b) * q(1, 3));
  CHECK(dipole_gap(n, a, D(4, 5)).is_zero());
  // o x at 1 then x o with hole 5: hole distance 4, (4-1)^2
  CHECK(dipole_gap(n, a, D(5, 4)) == -(dipole_corr(n, a) * dipole_corr(n, D(5, 4)) * q(1, 9)));
}

TEST_CASE("bulk_dipole_corr", "[closed-forms]") {
  CHECK(bulk_dipole_corr({Rational(1)}, {{D(1, 2)}}) == inv_pi(1));
  CHECK(bulk_dipole_corr({Rational(1)}, {{D(2, 1)}}) == inv_pi(1));
  CHECK(bulk_dipole_corr({Rational(1, 2)}, {{D(1, 2)}}) == inv_pi(1) * ExactValue::sqrt_of(Rational(1, 3)));
  CHECK(bulk_dipole_corr({Rational(1, 2)}, {{D(2, 1)}}) == inv_pi(1) * ExactValue::sqrt_of(3));
  const std::vector<Dipole> c1{D(1, 2), D(3, 4)}, c2{D(5, 4)};
  CHECK(bulk_dipole_corr({Rational(1, 3), Rational(3, 2)}, {c1, c2}) ==
        bulk_dipole_corr({Rational(1, 3)}, {c1}) * bulk_dipole_corr({Rational(3, 2)}, {c2}));
  CHECK_THROWS(bulk_dipole_corr({Rational(2)}, {{D(1, 2)}}));
}

TEST_CASE("center_dipole_corr", "[closed-forms]") {
  CHECK(center_dipole_corr({D(1, 2)}) == inv_pi(1));
  CHECK(center_dipole_corr({D(1, 2), D(3, 4)}) == inv_pi(2) * q(4, 3));
  CHECK(center_dipole_corr({D(1, 2), D(4, 5)}) == center_dipole_corr({D(1, 2)}) * center_dipole_corr({D(4, 5)}));
}

TEST_CASE("centre pair factor is the squared E^2 factor", "[closed-forms]") {
  for (int h = 2; h <= 40; h += 2) {
    CHECK(e_squared({1, 1 + h}, {2, 2 + h}) == ExactValue(center_pair_factor(h)));
    CHECK(center_dipole_corr({D(1, 2), D(1 + h, 2 + h)}) == inv_pi(2) * ExactValue(center_pair_factor(h)));
  }
}

TEST_CASE("finite and centre correlations share the interaction factor", "[closed-forms]") {
  const int n = 200;
  const auto a = D(n - 1, n), b = D(n + 1, n + 2);
  const auto fin = dipole_family_corr(n, {a, b}) / (dipole_corr(n, a) * dipole_corr(n, b));
  const auto lim = center_dipole_corr({a, b}) / (center_dipole_corr({a}) * center_dipole_corr({b}));
  CHECK(fin == lim);
}

TEST_CASE("slit_corr", "[closed-forms]") {
  CHECK(slit_corr(1) == inv_pi(1));
  CHECK(slit_corr(2) == inv_pi(2) * q(4, 3));
  CHECK(slit_corr(0) == q(1));
  for (int a = 1; a <= 6; ++a) {
    SlitSpec fwd{{a}, {}, {}}, back{{a}, {false}, {}};
    CHECK(multi_slit_corr(fwd) == slit_corr(a));
    CHECK(multi_slit_corr(back) == slit_corr(a));
  }
}

TEST_CASE("slit_ratio", "[closed-forms]") {
  CHECK(slit_ratio(1, 1, 1, Orientation::same) == q(4, 5));
  CHECK(center_dipole_corr({D(1, 2), D(5, 6)}) / center_dipole_corr({D(1, 2), D(3, 4)}) == q(4, 5));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) CHECK(slit_ratio(a, b, 0, Orientation::same) == q(1));
  for (int a = 0; a <= 4; ++a)
    for (int d = 0; d <= 4; ++d) CHECK(slit_ratio(a, 0, d, Orientation::same) == q(1));
  CHECK(slit_ratio(1, 2, 1, Orientation::same) == q(27, 35));
  CHECK(slit_ratio(1, 1, 2, Orientation::same) == q(27, 35));
  CHECK_THROWS(slit_ratio(-1, 1, 1, Orientation::same));
}

TEST_CASE("normalised slit symmetry, a,b,d <= 6", "[closed-forms]") {
  const auto t = check_slit_symmetry(6);
  INFO(t.detail());
  CHECK(t.failed == 0);
  CHECK(t.checked == 216);
}

TEST_CASE("slit ratios agree with centre correlations", "[closed-forms]") {
  const auto t = check_slit_routes(4);
  INFO(t.detail());
  CHECK(t.failed == 0);
}

TEST_CASE("multi_slit_corr", "[closed-forms]") {
  CHECK(multi_slit_corr(SlitSpec{{1, 1}, {}, {2}}) == inv_pi(2) * q(16, 15));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int d = 0; d <= 3; ++d)
        CHECK(multi_slit_corr(SlitSpec{{a, b}, {}, {2 * d}}) == slit_ratio(a, b, d, Orientation::same) * slit_corr(a + b));
  CHECK_THROWS(multi_slit_corr(SlitSpec{{1, 1}, {}, {}}));
}

TEST_CASE("mixed-parity slit placements are exact products", "[closed-forms]") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int d = 0; d <= 3; ++d) {
        CHECK(multi_slit_corr(SlitSpec{{a, b}, {}, {2 * d + 1}}) == slit_corr(a) * slit_corr(b));
        CHECK(multi_slit_corr(SlitSpec{{a, b}, {true, false}, {2 * d}}) == slit_corr(a) * slit_corr(b));
      }
}

TEST_CASE("P and Q products", "[closed-forms]") {
  CHECK(p_product(Rational(1, 2), 1) == ExactValue(Rational(1, 4), 2));
  CHECK(p_product(Rational(5, 2), 0) == q(1));
  CHECK(p_product(1, 1) == ExactValue(Rational(8, 3), -2));
  CHECK(q_product(1, Rational(7, 2)) == q(3, 2));
  CHECK(q_product(0, Rational(7, 2)) == q(1));
  CHECK_THROWS(p_product(0, 1));
  CHECK_THROWS(q_product(3, Rational(3)));
}

TEST_CASE("Q squared equals its hyperfactorial form (s <= 4, n <= 8)", "[closed-forms]") {
  for (int n = 1; n <= 8; ++n)
    for (int s = 0; s <= std::min(4, n); ++s) {
      const auto qq = q_product(s, Rational(2 * n + 3, 2));
      CHECK(qq * qq == q_squared_hyperfactorial_form(s, n));
    }
}

TEST_CASE("monomer_even_count_ratio examples", "[closed-forms]") {
  CHECK(monomer_even_count_ratio(1, {1}) == q(1));
  CHECK(monomer_even_count_ratio(3, {}) == q(1));
  CHECK(monomer_even_count_ratio(2, {1}) == q(9, 4));
  CHECK_THROWS(monomer_even_count_ratio(2, {3}));
  CHECK_THROWS(monomer_even_count_ratio(2, {1, 1}));
}

TEST_CASE("monomer count: both evaluation paths agree (n <= 8)", "[closed-forms]") {
  const auto t = check_monomer_paths(8);
  INFO(t.detail());
  CHECK(t.failed == 0);
  CHECK(t.checked > 300);
}

TEST_CASE("monomer counts against the oracle", "[closed-forms][oracle]") {
  for (int n = 1; n <= 3; ++n)
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
      std::vector<int> s, holes;
      for (int j = 0; j <= n; ++j)
        if (mask >> j & 1) s.push_back(j);
      for (std::size_t j = 0; j < s.size(); ++j) holes.push_back(2 * s[j] + static_cast<int>(j) + 1);
      const auto c = make_config(n, holes);
      CHECK(monomer_even_count_ratio(n, s) ==
            ExactValue(Rational(count_matchings(c).value, diamond_count(n))));
    }
}

TEST_CASE("elementary hole move examples", "[closed-forms]") {
  CHECK(move_hole_ratio(make_config(1, {3}), 0) == q(1));
  CHECK(jump_set_hole(make_config(2, {3}), 0) == std::vector<int>{5});
  CHECK(move_hole_ratio(make_config(2, {3}), 0) == q(3, 2));
  CHECK_THROWS(move_hole_ratio(make_config(1, {1}), 0));
  CHECK_THROWS(move_hole_ratio(make_config(2, {2, 3}), 1));
}

TEST_CASE("jump sets stay on free axis labels", "[closed-forms]") {
  const auto c = make_config(14, {5, 9, 14, 20, 26}, {6, 12, 17, 18});
  const auto s = jump_set_hole(c, 1);
  for (int j : s) {
    CHECK(j >= 1);
    CHECK(j <= c.width());
    CHECK_FALSE(c.is_hole(j));
    CHECK(j != 9);
    CHECK(j != 8);
  }
  const auto sp = jump_set_sep(c, 1);
  for (int j : sp) {
    CHECK_FALSE(c.is_hole(j));
    CHECK(j != 12);
    CHECK(j != 11);
  }
}

TEST_CASE("every elementary move matches the oracle (2n <= 6)", "[closed-forms][oracle]") {
  int holes = 0, seps = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 2; ++l)
        for_each_config(n, k, l, [&](const DefectConfig& c) {
          const BigInt m = count_matchings(c).value;
          for (std::size_t i = 0; i < c.holes.size(); ++i) {
            const int a = c.holes[i];
            if (a == 1 || c.occupied(a - 1)) continue;
            auto moved = c;
            moved.holes[i] = a - 1;
            const BigInt mm = count_matchings(moved).value;
            if (mm == 0) continue;
            INFO(describe(c) << " hole " << a);
            CHECK(move_hole_ratio(c, i) == ExactValue(Rational(m, mm)));
            ++holes;
          }
          for (std::size_t i = 0; i < c.seps.size(); ++i) {
            const int b = c.seps[i];
            if (b == 1 || c.occupied(b - 1)) continue;
            auto moved = c;
            moved.seps[i] = b - 1;
            const BigInt mm = count_matchings(moved).value;
            if (mm == 0) continue;
            INFO(describe(c) << " sep " << b);
            CHECK(move_sep_ratio(c, i) == ExactValue(Rational(m, mm)));
            ++seps;
          }
        });
  CHECK(holes > 100);
  CHECK(seps > 50);
}

TEST_CASE("hole-to-separation double ratio against four oracle counts", "[closed-forms][oracle]") {
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int l = 0; l <= 2; ++l)
        for_each_config(n, k, l, [&](const DefectConfig& c) {
          const int a1 = c.holes.front();
          if (a1 == 1 || c.occupied(a1 - 1)) return;
          auto h1 = c;
          h1.holes.front() = a1 - 1;
          DefectConfig t{n + 1, {c.holes.begin() + 1, c.holes.end()}, c.seps};
          auto t0 = t, t1 = t;
          t0.seps.push_back(a1);
          t1.seps.push_back(a1 - 1);
          std::sort(t0.seps.begin(), t0.seps.end());
          std::sort(t1.seps.begin(), t1.seps.end());
          const BigInt m = count_matchings(c).value, m1 = count_matchings(h1).value;
          const BigInt p = count_matchings(t0).value, p1 = count_matchings(t1).value;
          if (m1 == 0 || p == 0 || p1 == 0) return;
          INFO(describe(c));
          CHECK(hole_to_sep_ratio(c) == ExactValue(Rational(m, m1) / Rational(p, p1)));
          ++checked;
        });
  CHECK(checked > 20);
  // k = 1, l = 0: only the boundary factor survives
  const auto c = make_config(2, {3});
  CHECK(hole_to_sep_ratio(c) == q(std::abs(2 - 5), 2));
}

TEST_CASE("count_exact examples and paths", "[closed-forms]") {
  auto e = count_exact(make_config(1, {}));
  CHECK(e.value == 8);
  CHECK(e.path == CountPath::diamond);
  e = count_exact(make_config(2, {3}));
  CHECK(e.value == 2304);
  CHECK(path_name(e.path) == "hole-chain");
  e = count_exact(make_config(2, {1, 3}, {2, 4}));
  CHECK(e.value == 256);
  CHECK(e.path == CountPath::dipole_family);
  // beyond the oracle cap without a closed form
  CHECK_THROWS_AS(count_exact(make_config(6, {1, 2}, {3}), OracleOptions{4}), unsupported_instance);
  // same config inside the cap falls back to the oracle
  e = count_exact(make_config(2, {1, 2}, {3}), OracleOptions{4});
  CHECK(e.path == CountPath::oracle);
}

TEST_CASE("count_exact is independent of the move order", "[closed-forms]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    const int k = 1 + trial % 4;
    std::vector<int> all(2 * n + k);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> holes(all.begin(), all.begin() + k);
    const auto c = make_config(n, holes);
    CHECK(packing_ratio(c, MoveOrder::leftmost_first) == packing_ratio(c, MoveOrder::round_robin));
  }
}

TEST_CASE("bars_count", "[closed-forms]") {
  for (int p = 0; p <= 2; ++p)
    for (int qq = 0; qq <= 2; ++qq) CHECK(bars_count(BarConfig{1, 0, 0, p, qq}) == 8);
  CHECK(bars_count(BarConfig{2, 1, 0, 1, 1}) == 9216);
  CHECK(count_matchings(BarConfig{2, 1, 0, 1, 1}.config()).value == 9216);
  CHECK_THROWS(bars_count(BarConfig{2, 2, 1, 0, 0}));
  // p = q = 0 with k holes: zero-length bars leave the diamond
  CHECK(bars_count(BarConfig{3, 1, 1, 0, 0}) == diamond_count(3));
}

TEST_CASE("bars count: both evaluation paths agree (n <= 8)", "[closed-forms]") {
  const auto t = check_bars_paths(8);
  INFO(t.detail());
  CHECK(t.failed == 0);
  CHECK(t.checked > 1000);
}

TEST_CASE("bars with p = 0 reduce to a monomer family", "[closed-forms]") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (int qq = 1; qq <= 3; ++qq) {
        const BarConfig b{n, k, 0, 0, qq};
        CHECK(Rational(bars_count(b)) == Rational(diamond_count(n)) * packing_ratio(b.config()));
      }
}
