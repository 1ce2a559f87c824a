#include "aztec/lattice.hpp"
#include "aztec/oracle.hpp"
#include "aztec/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace aztec;

TEST_CASE("build_graph on AD_2", "[lattice]") {
  const auto g = build_graph(make_config(1, {}));
  CHECK(g.vertices.size() == 12);
  CHECK(g.balanced());
  CHECK(g.rows == 5);
  CHECK(g.cols == 5);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (int w : g.adj[v]) CHECK(g.vertices[v].color != g.vertices[w].color);
}

TEST_CASE("build_graph with one hole on the wider rectangle", "[lattice]") {
  const auto g = build_graph(make_config(1, {1}));
  CHECK(g.balanced());
  CHECK(g.cols == 7);
  CHECK(g.axis_map.count(1) == 0);
}

TEST_CASE("build_graph on the mixed 8-defect example", "[lattice]") {
  const auto c = make_config(8, {2, 4, 5, 10}, {8, 13, 14});
  CHECK(c.width() == 17);
  const auto g = build_graph(c);
  CHECK(g.balanced());
  for (int s : c.seps) {
    REQUIRE(g.axis_map.at(s).size() == 2);
    const auto& up = g.vertices[g.axis_map.at(s)[0]];
    const auto& down = g.vertices[g.axis_map.at(s)[1]];
    CHECK(up.tag == Vertex::Tag::up);
    CHECK(down.tag == Vertex::Tag::down);
    // each copy only reaches its own half
    for (int w : g.adj[g.axis_map.at(s)[0]]) CHECK(g.vertices[w].row < up.row);
    for (int w : g.adj[g.axis_map.at(s)[1]]) CHECK(g.vertices[w].row > down.row);
  }
  for (int h : c.holes) CHECK(g.axis_map.count(h) == 0);
  for (int j = 1; j <= c.width(); ++j)
    if (!c.occupied(j)) CHECK(g.axis_map.at(j).size() == 1);
}

TEST_CASE("config validation", "[lattice]") {
  CHECK_THROWS_AS(make_config(1, {1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_config(1, {4}), std::invalid_argument);
  CHECK_THROWS_AS(make_config(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_config(0, {}), std::invalid_argument);
  DefectConfig bad{2, {3, 1}, {}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("rotate_180", "[lattice]") {
  // width 4 needs k - l = 2 on n = 1
  const auto c = make_config(1, {1, 2});
  CHECK(rotate_180(c).holes == std::vector<int>{3, 4});
  // width 4 with a single hole: n = 2 and one separation
  const auto w4 = make_config(2, {1}, {2});
  CHECK(w4.width() == 4);
  CHECK(rotate_180(w4).holes == std::vector<int>{4});
  const auto d = make_config(1, {1, 2}, {3});
  const auto r = rotate_180(d);
  CHECK(r.holes == std::vector<int>{2, 3});
  CHECK(r.seps == std::vector<int>{1});
  CHECK(rotate_180(rotate_180(d)) == d);
}

TEST_CASE("rotate_180 preserves the matching count (2n <= 6)", "[lattice][oracle]") {
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        for_each_config(n, k, l, [&](const DefectConfig& c) {
          CHECK(count_matchings(c).value == count_matchings(rotate_180(c)).value);
          ++checked;
        });
  CHECK(checked > 100);
}

TEST_CASE("bipartition is balanced for every small config", "[lattice]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 2; ++l)
        for_each_config(n, k, l, [&](const DefectConfig& c) { CHECK(build_graph(c).balanced()); });
}

TEST_CASE("DefectCluster charge and ordering", "[lattice]") {
  const auto cl = DefectCluster::from_sets({5, 1}, {2, 7, 8});
  CHECK(cl.charge() == -1);
  CHECK(cl.kind_sequence() == "oxoxx");
  CHECK(cl.translated(3).holes() == std::vector<int>{4, 8});
  CHECK_THROWS(DefectCluster::from_sets({1}, {1}));
}

TEST_CASE("dipole kinds and signs", "[lattice]") {
  const auto a = Dipole::from_positions(1, 2);
  CHECK(a.kind == Dipole::Kind::hole_sep_odd);
  CHECK(a.s == 0);
  CHECK(a.sign() == 1);
  const auto b = Dipole::from_positions(4, 5);
  CHECK(b.kind == Dipole::Kind::hole_sep_even);
  CHECK(b.s == 2);
  const auto c = Dipole::from_positions(4, 3);
  CHECK(c.kind == Dipole::Kind::sep_hole_even);
  CHECK(c.sign() == -1);
  const auto d = Dipole::from_positions(5, 4);
  CHECK(d.kind == Dipole::Kind::sep_hole_odd);
  CHECK(d.odd());
  for (int h = 1; h <= 20; ++h)
    for (int s : {h - 1, h + 1}) {
      if (s < 1) continue;
      const auto x = Dipole::from_positions(h, s);
      CHECK(x.hole() == h);
      CHECK(x.sep() == s);
    }
  CHECK_THROWS(Dipole::from_positions(1, 3));
}

TEST_CASE("dipole decomposition and JSON round trip", "[lattice]") {
  std::vector<Dipole> ds;
  CHECK(dipole_decompose(make_config(2, {1, 3}, {2, 4}), ds));
  CHECK(ds.size() == 2);
  CHECK(config_from_dipoles(2, ds) == make_config(2, {1, 3}, {2, 4}));
  CHECK_FALSE(dipole_decompose(make_config(2, {1, 2}, {3, 4}), ds));

  const auto c = make_config(3, {2, 5}, {6});
  nlohmann::json j = c;
  CHECK(j.dump() == R"({"holes":[2,5],"n":3,"seps":[6]})");
  CHECK(j.get<DefectConfig>() == c);
  CHECK_THROWS(nlohmann::json::parse(R"({"n":1,"holes":[1],"seps":[1]})").get<DefectConfig>());
}
