#include "permsep/permutation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace permsep {

PairSet::PairSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool PairSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool PairSet::intersects(const PairSet& other) const {
  auto a = edges_.begin();
  auto b = other.edges_.begin();
  while (a != edges_.end() && b != other.edges_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

Permutation::Permutation(std::vector<Vertex> seq) : seq_(std::move(seq)) {
  if (seq_.empty()) throw std::invalid_argument("permutation must be nonempty");
  std::vector<Vertex> sorted = seq_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("permutation repeats a vertex");
  }
}

Permutation Permutation::trusted(std::vector<Vertex> seq) {
  return Permutation(std::move(seq), TrustedTag{});
}

std::vector<Vertex> Permutation::vertex_set() const {
  std::vector<Vertex> v = seq_;
  std::sort(v.begin(), v.end());
  return v;
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<Vertex>(seq_.rbegin(), seq_.rend()), TrustedTag{});
}

namespace {

void check_k(const Permutation& p, int k) {
  if (k < 2 || static_cast<std::size_t>(k) > p.size()) {
    throw std::out_of_range("k must satisfy 2 <= k <= n (k=" + std::to_string(k) +
                            ", n=" + std::to_string(p.size()) + ")");
  }
}

PairSet pairs_at_distance(const Permutation& p, std::size_t d) {
  std::vector<Edge> out;
  out.reserve(p.size() - d);
  for (std::size_t i = 0; i + d < p.size(); ++i) out.push_back(Edge::of(p[i], p[i + d]));
  return PairSet(std::move(out));
}

/// positions[t] = index in q of vertex set[t]
std::vector<std::size_t> positions_over(const std::vector<Vertex>& set, const Permutation& q) {
  std::vector<std::size_t> pos(set.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto it = std::lower_bound(set.begin(), set.end(), q[i]);
    pos[static_cast<std::size_t>(it - set.begin())] = i;
  }
  return pos;
}

bool adjacent_in_one_at_distance_in_other(const Permutation& p,
                                          const std::vector<std::size_t>& q_pos,
                                          const std::vector<Vertex>& set, std::size_t d) {
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
  };
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const std::size_t a = q_pos[index(p[i])];
    const std::size_t b = q_pos[index(p[i + 1])];
    if ((a > b ? a - b : b - a) == d) return true;
  }
  return false;
}

}  // namespace

PairSet neighbor_pairs(const Permutation& p) { return pairs_at_distance(p, 1); }

PairSet separated_pairs(const Permutation& p, int k) {
  check_k(p, k);
  return pairs_at_distance(p, static_cast<std::size_t>(k - 1));
}

std::vector<Vertex> common_vertex_set(std::span<const Permutation> family) {
  if (family.empty()) throw std::invalid_argument("family is empty");
  std::vector<Vertex> set = family.front().vertex_set();
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (family[i].size() != set.size() || family[i].vertex_set() != set) {
      throw std::invalid_argument("family member " + std::to_string(i) +
                                  " has a different vertex set");
    }
  }
  return set;
}

bool is_k_separated(const Permutation& p, const Permutation& q, int k) {
  check_k(p, k);
  const std::vector<Vertex> set = p.vertex_set();
  if (q.size() != p.size() || q.vertex_set() != set) {
    throw std::invalid_argument("permutations have different vertex sets");
  }
  const auto d = static_cast<std::size_t>(k - 1);
  return adjacent_in_one_at_distance_in_other(p, positions_over(set, q), set, d) ||
         adjacent_in_one_at_distance_in_other(q, positions_over(set, p), set, d);
}

SetPair to_set_pair(const Permutation& p, int k) {
  return SetPair{neighbor_pairs(p), separated_pairs(p, k), k};
}

bool weakly_cross_intersecting(const SetPair& s, const SetPair& t) {
  if (s.k != t.k) throw std::invalid_argument("set pairs built for different k");
  return s.a.intersects(t.b) || t.a.intersects(s.b);
}

bool union_contains_odd_cycle(const Permutation& p, const Permutation& q) {
  const std::vector<Vertex> set = p.vertex_set();
  if (q.size() != p.size() || q.vertex_set() != set) {
    throw std::invalid_argument("permutations have different vertex sets");
  }
  const std::size_t n = set.size();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
  };
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Permutation* path : {&p, &q}) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t a = index((*path)[i]);
      const std::size_t b = index((*path)[i + 1]);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<int> side(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop();
      for (std::size_t u : adj[v]) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          todo.push(u);
        } else if (side[u] == side[v]) {
          return true;
        }
      }
    }
  }
  return false;
}

std::vector<Permutation> product_family(std::span<const Permutation> f1,
                                        std::span<const Permutation> f2) {
  if (f1.empty() || f2.empty()) return {};
  const std::vector<Vertex> v1 = common_vertex_set(f1);
  const std::vector<Vertex> v2 = common_vertex_set(f2);
  std::vector<Vertex> both;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(both));
  if (!both.empty()) throw std::invalid_argument("product factors share vertices");

  std::vector<Permutation> out;
  out.reserve(f1.size() * f2.size());
  for (const Permutation& a : f1) {
    for (const Permutation& b : f2) {
      std::vector<Vertex> seq(a.seq().begin(), a.seq().end());
      seq.insert(seq.end(), b.seq().begin(), b.seq().end());
      out.push_back(Permutation::trusted(std::move(seq)));
    }
  }
  return out;
}

}  // namespace permsep
