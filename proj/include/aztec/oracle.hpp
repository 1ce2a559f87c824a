#pragma once

#include "aztec/exact.hpp"
#include "aztec/lattice.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace aztec {

struct MatchCount {
  BigInt value = 0;
  bool balanced = true;
};

struct instance_too_large : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap n <= 4; AZTEC_ORACLE_MAX_N overrides.
inline int default_oracle_max_n() {
  if (const char* env = std::getenv("AZTEC_ORACLE_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (...) {
    }
  }
  return 4;
}

struct OracleOptions {
  int max_n = default_oracle_max_n();
};

// Column sweep: state is the set of column-(c+1) vertices already matched from the left.
inline MatchCount count_matchings(const AxisGraph& g, const OracleOptions& opt = {}) {
  if (g.config.n > opt.max_n)
    throw instance_too_large("oracle cap exceeded: n=" + std::to_string(g.config.n) +
                             " > " + std::to_string(opt.max_n));
  if (!g.balanced()) return {0, false};

  std::vector<std::vector<int>> cols(g.cols);
  std::vector<int> slot(g.vertices.size());
  for (std::size_t id = 0; id < g.vertices.size(); ++id) {
    auto& col = cols[g.vertices[id].col];
    slot[id] = static_cast<int>(col.size());
    col.push_back(static_cast<int>(id));
  }
  for (const auto& col : cols)
    if (col.size() > 64) throw instance_too_large("column too tall for the profile mask");

  std::map<std::uint64_t, BigInt> cur{{0, 1}};
  for (int c = 0; c < g.cols; ++c) {
    std::map<std::uint64_t, BigInt> next;
    for (const auto& [mask, ways] : cur) {
      std::vector<int> open;
      for (int id : cols[c])
        if (!(mask >> slot[id] & 1)) open.push_back(id);
      std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t taken) {
        if (i == open.size()) {
          next[taken] += ways;
          return;
        }
        for (int w : g.adj[open[i]]) {
          if (g.vertices[w].col != c + 1) continue;
          const std::uint64_t bit = std::uint64_t{1} << slot[w];
          if (taken & bit) continue;
          rec(i + 1, taken | bit);
        }
      };
      rec(0, 0);
    }
    cur = std::move(next);
  }
  auto it = cur.find(0);
  return {it == cur.end() ? BigInt(0) : it->second, true};
}

inline MatchCount count_matchings(const DefectConfig& c, const OracleOptions& opt = {}) {
  return count_matchings(build_graph(c), opt);
}

inline BigInt diamond_count(int n) { return pow2(static_cast<unsigned long>(n) * (2 * n + 1)); }

inline ExactValue corr_finite(const DefectConfig& c, const OracleOptions& opt = {}) {
  if (c.k() != c.l()) throw std::invalid_argument("corr_finite needs k = l");
  const MatchCount m = count_matchings(c, opt);
  const MatchCount base = count_matchings(DefectConfig{c.n, {}, {}}, opt);
  return ExactValue(Rational(m.value, base.value));
}

}  // namespace aztec
