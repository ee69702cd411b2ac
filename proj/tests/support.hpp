#pragma once

// Brute-force oracles and seeded generators shared by the test suites.

#include "permsep/labelled_graph.hpp"
#include "permsep/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace permsep::testing {

using Rng = std::mt19937_64;

inline std::map<Vertex, long> positions(const Permutation& p) {
  std::map<Vertex, long> pos;
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<long>(i);
  return pos;
}

/// Straight from the definition: some pair at distance 1 in one and k-1 in the other.
inline bool oracle_separated(const Permutation& p, const Permutation& q, int k) {
  const auto pp = positions(p);
  const auto pq = positions(q);
  for (const auto& [x, px] : pp) {
    for (const auto& [y, py] : pp) {
      if (x >= y) continue;
      const long dp = std::labs(px - py);
      const long dq = std::labs(pq.at(x) - pq.at(y));
      if ((dp == 1 && dq == k - 1) || (dq == 1 && dp == k - 1)) return true;
    }
  }
  return false;
}

inline bool oracle_family_ok(const std::vector<Permutation>& f, int k) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!oracle_separated(f[i], f[j], k)) return false;
    }
  }
  return true;
}

inline std::set<std::pair<Vertex, Vertex>> oracle_edges(const Permutation& p) {
  std::set<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    e.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
  }
  return e;
}

inline std::vector<Vertex> iota_ids(std::size_t n, Vertex first = 1) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), first);
  return v;
}

inline Permutation random_permutation(Rng& rng, std::size_t n, Vertex first = 1) {
  std::vector<Vertex> v = iota_ids(n, first);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Isolated vertex plus g grids of one random width w >= 2, heights in [1, max_h],
/// over a shuffled id range.
inline LabelledGraph random_uniform_graph(Rng& rng, std::size_t max_g, std::size_t max_w,
                                          std::size_t max_h) {
  const std::size_t g = uniform(rng, 0, max_g);
  const std::size_t w = uniform(rng, 2, max_w);
  std::vector<std::size_t> heights(g);
  std::size_t total = 1;
  for (auto& h : heights) {
    h = uniform(rng, 1, max_h);
    total += w * h;
  }
  std::vector<Vertex> ids = iota_ids(total, 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::size_t next = 1;
  std::vector<Grid> grids;
  for (const std::size_t h : heights) {
    grids.emplace_back(w, h, std::vector<Vertex>(ids.begin() + next, ids.begin() + next + w * h));
    next += w * h;
  }
  return LabelledGraph(std::move(grids), ids.front());
}

/// Labels read from the grids cell by cell, independent of edge_labels().
inline std::map<std::pair<Vertex, Vertex>, char> oracle_labels(const LabelledGraph& g) {
  std::map<std::pair<Vertex, Vertex>, char> out;
  auto put = [&](Vertex a, Vertex b, char l) { out[{std::min(a, b), std::max(a, b)}] = l; };
  for (const Grid& grid : g.grids()) {
    for (std::size_t r = 0; r < grid.height(); ++r) {
      for (std::size_t c = 0; c < grid.width(); ++c) {
        if (c + 1 < grid.width()) put(grid.at(r, c), grid.at(r, c + 1), 'a');
        if (r + 1 < grid.height()) put(grid.at(r, c), grid.at(r + 1, c), 'b');
      }
    }
  }
  for (const auto& [e, l] : g.extra_edges()) put(e.lo, e.hi, label_char(l));
  return out;
}

inline bool oracle_compatible(const LabelledGraph& a, const LabelledGraph& b) {
  const auto la = oracle_labels(a);
  const auto lb = oracle_labels(b);
  for (const auto& [e, l] : la) {
    auto it = lb.find(e);
    if (it != lb.end() && it->second != l) return true;
  }
  return false;
}

}  // namespace permsep::testing
