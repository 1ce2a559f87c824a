#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <cstdlib>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aztec {

enum class DefectKind { hole, separation };

inline char kind_char(DefectKind k) { return k == DefectKind::hole ? 'o' : 'x'; }

struct DefectConfig {
  int n = 1;
  std::vector<int> holes;
  std::vector<int> seps;

  int k() const { return static_cast<int>(holes.size()); }
  int l() const { return static_cast<int>(seps.size()); }
  int width() const { return 2 * n + k() - l(); }

  bool is_hole(int j) const { return std::binary_search(holes.begin(), holes.end(), j); }
  bool is_sep(int j) const { return std::binary_search(seps.begin(), seps.end(), j); }
  bool occupied(int j) const { return is_hole(j) || is_sep(j); }

  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (width() < 1) throw std::invalid_argument("width 2n+k-l must be at least 1");
    auto check = [&](const std::vector<int>& v, const char* what) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > width())
          throw std::invalid_argument(std::string(what) + " label out of range: " + std::to_string(v[i]));
        if (i && v[i] <= v[i - 1]) throw std::invalid_argument(std::string(what) + " must be strictly increasing");
      }
    };
    check(holes, "hole");
    check(seps, "separation");
    for (int h : holes)
      if (is_sep(h)) throw std::invalid_argument("label " + std::to_string(h) + " is both hole and separation");
  }

  // defects in axis order
  std::vector<std::pair<int, DefectKind>> defects() const {
    std::vector<std::pair<int, DefectKind>> out;
    for (int h : holes) out.emplace_back(h, DefectKind::hole);
    for (int s : seps) out.emplace_back(s, DefectKind::separation);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const DefectConfig& a, const DefectConfig& b) {
    return a.n == b.n && a.holes == b.holes && a.seps == b.seps;
  }
};

inline DefectConfig make_config(int n, std::vector<int> holes, std::vector<int> seps = {}) {
  std::sort(holes.begin(), holes.end());
  std::sort(seps.begin(), seps.end());
  DefectConfig c{n, std::move(holes), std::move(seps)};
  c.validate();
  return c;
}

inline DefectConfig rotate_180(const DefectConfig& c) {
  const int w1 = c.width() + 1;
  DefectConfig out{c.n, {}, {}};
  for (int h : c.holes) out.holes.push_back(w1 - h);
  for (int s : c.seps) out.seps.push_back(w1 - s);
  std::sort(out.holes.begin(), out.holes.end());
  std::sort(out.seps.begin(), out.seps.end());
  return out;
}

inline void to_json(nlohmann::json& j, const DefectConfig& c) {
  j = nlohmann::json{{"n", c.n}, {"holes", c.holes}, {"seps", c.seps}};
}

inline void from_json(const nlohmann::json& j, DefectConfig& c) {
  c.n = j.at("n").get<int>();
  c.holes = j.value("holes", std::vector<int>{});
  c.seps = j.value("seps", std::vector<int>{});
  std::sort(c.holes.begin(), c.holes.end());
  std::sort(c.seps.begin(), c.seps.end());
  c.validate();
}

// Defects at integer offsets on the axis, free of any ambient graph.
class DefectCluster {
 public:
  DefectCluster() = default;
  explicit DefectCluster(std::vector<std::pair<int, DefectKind>> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    for (std::size_t i = 1; i < items_.size(); ++i)
      if (items_[i].first == items_[i - 1].first) throw std::invalid_argument("cluster offsets must be distinct");
  }
  static DefectCluster from_sets(const std::vector<int>& holes, const std::vector<int>& seps) {
    std::vector<std::pair<int, DefectKind>> v;
    for (int h : holes) v.emplace_back(h, DefectKind::hole);
    for (int s : seps) v.emplace_back(s, DefectKind::separation);
    return DefectCluster(std::move(v));
  }

  const std::vector<std::pair<int, DefectKind>>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  int charge() const {
    int q = 0;
    for (auto& [x, k] : items_) q += k == DefectKind::hole ? 1 : -1;
    return q;
  }
  std::vector<int> holes() const { return positions(DefectKind::hole); }
  std::vector<int> seps() const { return positions(DefectKind::separation); }
  std::string kind_sequence() const {
    std::string s;
    for (auto& [x, k] : items_) s += kind_char(k);
    return s;
  }
  bool contains(int x) const {
    for (auto& [y, k] : items_)
      if (y == x) return true;
    return false;
  }
  DefectCluster translated(int d) const {
    auto v = items_;
    for (auto& it : v) it.first += d;
    return DefectCluster(std::move(v));
  }
  // move the i-th defect (axis order) one unit left
  DefectCluster moved_left(std::size_t i) const {
    auto v = items_;
    v.at(i).first -= 1;
    return DefectCluster(std::move(v));
  }

  friend bool operator==(const DefectCluster& a, const DefectCluster& b) { return a.items_ == b.items_; }

 private:
  std::vector<int> positions(DefectKind kind) const {
    std::vector<int> out;
    for (auto& [x, k] : items_)
      if (k == kind) out.push_back(x);
    return out;
  }
  std::vector<std::pair<int, DefectKind>> items_;
};

// Adjacent hole/separation pair. Positions per kind:
//   hole_sep_odd:  hole 2s+1, sep 2s+2      hole_sep_even: hole 2s,   sep 2s+1
//   sep_hole_even: sep 2s+1,  hole 2s+2     sep_hole_odd:  sep 2s,    hole 2s+1
struct Dipole {
  enum class Kind { hole_sep_odd, hole_sep_even, sep_hole_odd, sep_hole_even };
  Kind kind = Kind::hole_sep_odd;
  int s = 0;

  int hole() const {
    switch (kind) {
      case Kind::hole_sep_odd: return 2 * s + 1;
      case Kind::hole_sep_even: return 2 * s;
      case Kind::sep_hole_even: return 2 * s + 2;
      case Kind::sep_hole_odd: return 2 * s + 1;
    }
    return 0;
  }
  int sep() const {
    switch (kind) {
      case Kind::hole_sep_odd: return 2 * s + 2;
      case Kind::hole_sep_even: return 2 * s + 1;
      case Kind::sep_hole_even: return 2 * s + 1;
      case Kind::sep_hole_odd: return 2 * s;
    }
    return 0;
  }
  int left() const { return std::min(hole(), sep()); }
  int right() const { return std::max(hole(), sep()); }
  bool odd() const { return hole() % 2 != 0; }
  int sign() const { return hole() < sep() ? 1 : -1; }

  static Dipole from_positions(int hole, int sep) {
    if (std::abs(hole - sep) != 1 || std::min(hole, sep) < 1)
      throw std::invalid_argument("dipole needs adjacent positive hole and separation");
    Dipole d;
    if (hole < sep) {
      if (hole % 2) d = {Kind::hole_sep_odd, (hole - 1) / 2};
      else d = {Kind::hole_sep_even, hole / 2};
    } else {
      if (hole % 2) d = {Kind::sep_hole_odd, (hole - 1) / 2};
      else d = {Kind::sep_hole_even, (hole - 2) / 2};
    }
    return d;
  }

  friend bool operator==(const Dipole& a, const Dipole& b) { return a.hole() == b.hole() && a.sep() == b.sep(); }
};

inline void check_disjoint(const std::vector<Dipole>& ds) {
  std::set<int> seen;
  for (const auto& d : ds)
    for (int x : {d.hole(), d.sep()})
      if (!seen.insert(x).second) throw std::invalid_argument("overlapping dipoles at label " + std::to_string(x));
}

// Pair consecutive defects greedily; succeeds only when every pair is an adjacent hole/separation.
inline bool dipole_decompose(const DefectConfig& c, std::vector<Dipole>& out) {
  out.clear();
  auto ds = c.defects();
  if (ds.size() % 2) return false;
  for (std::size_t i = 0; i < ds.size(); i += 2) {
    auto [x, kx] = ds[i];
    auto [y, ky] = ds[i + 1];
    if (kx == ky || y != x + 1) return false;
    out.push_back(kx == DefectKind::hole ? Dipole::from_positions(x, y) : Dipole::from_positions(y, x));
  }
  return true;
}

inline DefectConfig config_from_dipoles(int n, const std::vector<Dipole>& ds) {
  DefectConfig c{n, {}, {}};
  for (const auto& d : ds) {
    c.holes.push_back(d.hole());
    c.seps.push_back(d.sep());
  }
  std::sort(c.holes.begin(), c.holes.end());
  std::sort(c.seps.begin(), c.seps.end());
  c.validate();
  return c;
}

struct Vertex {
  enum class Tag { none, up, down };
  int row = 0;
  int col = 0;
  int label = 0;  // axis label, 0 off the axis
  Tag tag = Tag::none;
  int color = 0;  // row parity
};

struct AxisGraph {
  DefectConfig config;
  int rows = 0;
  int cols = 0;
  std::vector<Vertex> vertices;  // column-major order
  std::vector<std::vector<int>> adj;
  std::map<int, std::vector<int>> axis_map;  // label -> vertex ids (two for separations)

  std::size_t color_count(int color) const {
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [&](const Vertex& v) { return v.color == color; }));
  }
  bool balanced() const { return color_count(0) == color_count(1); }
};

inline AxisGraph build_graph(const DefectConfig& c) {
  c.validate();
  AxisGraph g;
  g.config = c;
  const int axis = 2 * c.n;
  g.rows = 4 * c.n + 1;
  g.cols = 2 * c.width() + 1;
  std::map<std::tuple<int, int, int>, int> index;  // (row, col, tag)
  auto add = [&](int r, int col, int label, Vertex::Tag t) {
    const int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back({r, col, label, t, r % 2});
    index[{r, col, static_cast<int>(t)}] = id;
    if (label) g.axis_map[label].push_back(id);
  };
  for (int col = 0; col < g.cols; ++col)
    for (int r = 0; r < g.rows; ++r) {
      if ((r + col) % 2 == 0) continue;
      if (r != axis) {
        add(r, col, 0, Vertex::Tag::none);
        continue;
      }
      const int label = (col + 1) / 2;
      if (c.is_hole(label)) continue;
      if (c.is_sep(label)) {
        add(r, col, label, Vertex::Tag::up);
        add(r, col, label, Vertex::Tag::down);
      } else {
        add(r, col, label, Vertex::Tag::none);
      }
    }
  g.adj.assign(g.vertices.size(), {});
  for (std::size_t id = 0; id < g.vertices.size(); ++id) {
    const Vertex& v = g.vertices[id];
    for (int dr : {-1, 1}) {
      if (v.tag == Vertex::Tag::up && dr == 1) continue;
      if (v.tag == Vertex::Tag::down && dr == -1) continue;
      const int r = v.row + dr;
      for (int dc : {-1, 1}) {
        const int col = v.col + dc;
        // an up copy only meets the row above the axis, a down copy the row below
        Vertex::Tag want = Vertex::Tag::none;
        if (r == axis && c.is_sep((col + 1) / 2)) want = dr == 1 ? Vertex::Tag::up : Vertex::Tag::down;
        auto it = index.find({r, col, static_cast<int>(want)});
        if (it != index.end()) g.adj[id].push_back(it->second);
      }
    }
  }
  return g;
}

}  // namespace aztec
