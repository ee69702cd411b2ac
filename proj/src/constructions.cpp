#include "permsep/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace permsep {

namespace {

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Vertex{1});
  return v;
}

Vertex wrap(long long v, int n) {
  long long r = (v - 1) % n;
  if (r < 0) r += n;
  return static_cast<Vertex>(r + 1);
}

Vertex rotate(Vertex v, int shift, int n) { return wrap(static_cast<long long>(v) + shift, n); }

// Adjacency lists of an edge set restricted to `vertices`; nullopt if an endpoint is foreign.
std::optional<std::map<Vertex, std::vector<Vertex>>> adjacency(std::span<const Vertex> vertices,
                                                               std::span<const Edge> edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Vertex v : vertices) adj[v];
  for (const Edge& e : edges) {
    auto a = adj.find(e.lo);
    auto b = adj.find(e.hi);
    if (a == adj.end() || b == adj.end()) return std::nullopt;
    a->second.push_back(e.hi);
    b->second.push_back(e.lo);
  }
  for (auto& entry : adj) std::sort(entry.second.begin(), entry.second.end());
  return adj;
}

std::optional<Permutation> try_path(std::span<const Vertex> vertices, std::span<const Edge> edges) {
  if (vertices.empty() || edges.size() + 1 != vertices.size()) return std::nullopt;
  auto adj = adjacency(vertices, edges);
  if (!adj) return std::nullopt;
  if (vertices.size() == 1) return Permutation(std::vector<Vertex>{vertices.front()});
  std::optional<Vertex> start;
  for (const auto& [v, nb] : *adj) {
    if (nb.size() > 2 || nb.empty()) return std::nullopt;
    if (nb.size() == 1 && !start) start = v;
  }
  if (!start) return std::nullopt;
  std::vector<Vertex> seq{*start};
  Vertex prev = *start;
  Vertex cur = adj->at(*start).front();
  while (true) {
    seq.push_back(cur);
    const auto& nb = adj->at(cur);
    if (nb.size() == 1) break;
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (seq.size() > vertices.size()) return std::nullopt;
  }
  if (seq.size() != vertices.size()) return std::nullopt;
  return Permutation(std::move(seq));
}

std::optional<std::vector<Vertex>> try_cycle(std::span<const Vertex> vertices,
                                             std::span<const Edge> edges) {
  if (vertices.size() < 3 || edges.size() != vertices.size()) return std::nullopt;
  auto adj = adjacency(vertices, edges);
  if (!adj) return std::nullopt;
  for (const auto& entry : *adj) {
    if (entry.second.size() != 2 || entry.second[0] == entry.second[1]) return std::nullopt;
  }
  const Vertex start = adj->begin()->first;
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = adj->at(start).front();
  while (cur != start) {
    cycle.push_back(cur);
    const auto& nb = adj->at(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (cycle.size() > vertices.size()) return std::nullopt;
  }
  if (cycle.size() != vertices.size()) return std::nullopt;
  return cycle;
}

std::vector<Edge> concat(std::span<const Edge> a, std::span<const Edge> b) {
  std::vector<Edge> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Permutation path_from_edges(std::span<const Vertex> vertices, std::span<const Edge> edges) {
  std::optional<Permutation> p = try_path(vertices, edges);
  if (!p) throw std::invalid_argument("edges do not form a Hamiltonian path");
  return *p;
}

std::vector<Vertex> cycle_from_edges(std::span<const Vertex> vertices,
                                     std::span<const Edge> edges) {
  auto c = try_cycle(vertices, edges);
  if (!c) throw std::invalid_argument("edges do not form a Hamiltonian cycle");
  return *c;
}

std::vector<Permutation> fixed_edge_family(int n) {
  if (n < 2 || n > 8) throw std::out_of_range("fixed_edge_family needs 2 <= n <= 8");
  std::vector<Vertex> seq = iota_vertices(n);
  std::vector<Permutation> out;
  do {
    if (seq.front() > seq.back()) continue;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (Edge::of(seq[i], seq[i + 1]) == Edge{1, 2}) {
        out.push_back(Permutation::trusted(seq));
        break;
      }
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::vector<Permutation> ham_decomposition(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("ham_decomposition needs even n >= 4");
  std::vector<Vertex> base;
  for (int t = 0; t < n / 2; ++t) {
    base.push_back(static_cast<Vertex>(1 + t));
    base.push_back(static_cast<Vertex>(n - t));
  }
  std::vector<Permutation> out;
  for (int s = 0; s < n / 2; ++s) {
    std::vector<Vertex> seq;
    for (const Vertex v : base) seq.push_back(rotate(v, s, n));
    out.push_back(Permutation::trusted(std::move(seq)));
  }
  return out;
}

std::vector<Permutation> ham_cover(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("ham_cover needs odd n >= 5");
  auto matching = [n](int i) {
    std::vector<Edge> m;
    for (int t = 1; t <= (n - 1) / 2; ++t) {
      m.push_back(Edge::of(rotate(static_cast<Vertex>(1 + t), i - 1, n),
                           rotate(static_cast<Vertex>(n + 1 - t), i - 1, n)));
    }
    return m;
  };
  const std::vector<Vertex> vertices = iota_vertices(n);
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    const int partner = ((i - 1 + (n - 1) / 2) % n) + 1;
    out.push_back(path_from_edges(vertices, concat(matching(i), matching(partner))));
  }
  return out;
}

std::vector<Permutation> balanced_family(int n) {
  if (n < 3 || n > 14) throw std::out_of_range("balanced_family needs 3 <= n <= 14");
  const int big = (n + 1) / 2;
  std::vector<Permutation> out;
  // Sides of size `big`, in lexicographic order.
  std::vector<int> comb(static_cast<std::size_t>(big));
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    if (n % 2 == 1 || comb.front() == 1) {
      std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
      for (const int v : comb) in[static_cast<std::size_t>(v)] = true;
      std::vector<Vertex> other;
      for (int v = 1; v <= n; ++v) {
        if (!in[static_cast<std::size_t>(v)]) other.push_back(static_cast<Vertex>(v));
      }
      std::vector<Vertex> seq;
      for (std::size_t t = 0; t < comb.size(); ++t) {
        seq.push_back(static_cast<Vertex>(comb[t]));
        if (t < other.size()) seq.push_back(other[t]);
      }
      out.push_back(Permutation::trusted(std::move(seq)));
    }
    int t = big;
    while (t > 0 && comb[static_cast<std::size_t>(t - 1)] == n - big + t) --t;
    if (t == 0) break;
    ++comb[static_cast<std::size_t>(t - 1)];
    for (int u = t; u < big; ++u) {
      comb[static_cast<std::size_t>(u)] = comb[static_cast<std::size_t>(u - 1)] + 1;
    }
  }
  return out;
}

PaddedGraph pad_to_width(const LabelledGraph& w, std::size_t target_w,
                         std::optional<Vertex> first_fresh) {
  Vertex next = 0;
  if (first_fresh) {
    next = *first_fresh;
  } else {
    const std::vector<Vertex> v = w.vertices();
    next = v.empty() ? 1 : v.back() + 1;
  }
  PaddedGraph out;
  std::vector<Grid> grids;
  for (const Grid& g : w.grids()) {
    if (g.width() > target_w) throw std::invalid_argument("grid is wider than the padding target");
    if (g.width() == target_w) {
      grids.push_back(g);
      continue;
    }
    std::vector<Vertex> cells;
    cells.reserve(target_w * g.height());
    for (std::size_t r = 0; r < g.height(); ++r) {
      const auto row = g.row(r);
      cells.insert(cells.end(), row.begin(), row.end());
      for (std::size_t c = g.width(); c < target_w; ++c) {
        cells.push_back(next++);
        ++out.fresh;
      }
    }
    grids.emplace_back(target_w, g.height(), std::move(cells));
  }
  out.graph = LabelledGraph(std::move(grids), w.isolated(), w.extra_edges());
  return out;
}

Pow2Result pow2_family(int n, int ell, const Pow2Options& options) {
  if (ell < 1) throw std::invalid_argument("pow2_family needs ell >= 1");
  if (n < 4) throw std::invalid_argument("pow2_family needs n >= 4");
  if (ell > 20) throw std::invalid_argument("pow2_family needs ell <= 20");
  Pow2Result result;
  result.n = n;
  result.ell = ell;
  result.k = (1 << ell) + 1;
  const std::size_t width = std::size_t{1} << ell;

  // Census bookkeeping first: it gives the exact count without enumerating.
  Census census{{Shape{1, 1}, static_cast<std::size_t>(n - 1)}};
  BigInt graphs = 1;
  for (int round = 0; round < ell; ++round) {
    CensusStep step = complete_width_double_census(census);
    graphs *= step.multiplier;
    census = std::move(step.census);
  }
  Census padded;
  std::size_t grid_count = 0;
  for (const auto& [shape, count] : census) {
    if (shape.w > width) throw std::logic_error("width doubling overshot the target width");
    result.fresh += (width - shape.w) * shape.h * count;
    padded[Shape{width, shape.h}] += count;
    grid_count += count;
  }
  result.n_prime = static_cast<std::size_t>(n) + result.fresh;
  result.stats.family_size = graphs;
  result.stats.grid_count = grid_count;
  result.stats.census = std::move(padded);
  result.stats.value = graphs * pow2(grid_count);
  result.stats.vertex_count = result.n_prime;
  if (options.count_only) return result;
  if (result.stats.value > options.cap) {
    throw CapExceeded("pow2 family of " + to_string(result.stats.value) +
                      " permutations exceeds the cap; use count-only mode");
  }

  std::vector<Grid> units;
  for (int v = 2; v <= n; ++v) units.emplace_back(1, 1, std::vector<Vertex>{static_cast<Vertex>(v)});
  std::vector<LabelledGraph> family{LabelledGraph::trusted(std::move(units), Vertex{1})};
  for (int round = 0; round < ell; ++round) {
    family = complete_width_double(family, options.cap).family;
  }
  const Vertex first_fresh = static_cast<Vertex>(n + 1);
  for (LabelledGraph& g : family) {
    PaddedGraph p = pad_to_width(g, width, first_fresh);
    if (p.fresh != result.fresh) throw std::logic_error("members padded with different fresh counts");
    result.graphs.push_back(std::move(p.graph));
  }
  const FamilyStats check = family_stats(result.graphs);
  if (check.value != result.stats.value || check.census != result.stats.census) {
    throw std::logic_error("enumerated family disagrees with the census bookkeeping");
  }
  for (const LabelledGraph& g : result.graphs) {
    std::vector<Permutation> paths = z_swap_all(g, options.jobs);
    result.family.insert(result.family.end(), std::make_move_iterator(paths.begin()),
                         std::make_move_iterator(paths.end()));
  }
  return result;
}

std::array<Matching, 3> three_matchings(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("three_matchings needs even n >= 4");
  std::array<Matching, 3> m;
  for (int t = 1; t <= n / 2; ++t) {
    m[0].push_back(Edge::of(static_cast<Vertex>(2 * t - 1), static_cast<Vertex>(2 * t)));
  }
  m[1].push_back(Edge::of(static_cast<Vertex>(n), 1));
  for (int t = 1; t < n / 2; ++t) {
    m[1].push_back(Edge::of(static_cast<Vertex>(2 * t), static_cast<Vertex>(2 * t + 1)));
  }
  if (n % 4 == 2) {
    for (int i = 1; i <= n / 2; ++i) {
      m[2].push_back(Edge::of(static_cast<Vertex>(i), static_cast<Vertex>(i + n / 2)));
    }
  } else {
    const Edge first = Edge::of(1, 4);
    const Edge second = Edge::of(3, wrap(6, n));
    for (int l = 0; l < n / 4; ++l) {
      const Edge a = Edge::of(wrap(1 + 4 * l, n), wrap(4 + 4 * l, n));
      const Edge b = Edge::of(wrap(3 + 4 * l, n), wrap(6 + 4 * l, n));
      m[2].push_back(a == first ? Edge::of(1, 3) : a);
      m[2].push_back(b == second ? Edge::of(4, wrap(6, n)) : b);
    }
  }
  const std::vector<Vertex> vertices = iota_vertices(n);
  for (int i = 0; i < 3; ++i) {
    if (!try_cycle(vertices, concat(m[static_cast<std::size_t>(i)],
                                    m[static_cast<std::size_t>((i + 1) % 3)]))) {
      throw std::logic_error("matching union is not a Hamiltonian cycle");
    }
  }
  return m;
}

namespace {

std::vector<Permutation> hcycle_family(std::span<const Vertex> vertices,
                                       const std::array<Matching, 3>& m,
                                       const std::array<std::optional<Edge>, 3>& closing) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Edge> edges = concat(m[i], m[(i + 1) % 3]);
    if (closing[i]) edges.push_back(*closing[i]);
    const std::vector<Vertex> cycle = cycle_from_edges(vertices, edges);
    for (const Edge& b : m[i]) out.push_back(perm_from_hcycle(LabelledHCycle{cycle, b}));
  }
  return out;
}

bool edge_disjoint(const std::array<Matching, 3>& m) {
  std::set<Edge> seen;
  for (const Matching& x : m) {
    for (const Edge& e : x) {
      if (!seen.insert(e).second) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Permutation> pnn_family(int n) {
  if (n < 3) throw std::invalid_argument("pnn_family needs n >= 3");
  const std::vector<Vertex> vertices = iota_vertices(n);
  if (n == 3) {
    const std::vector<Vertex> cycle{1, 2, 3};
    std::vector<Permutation> out;
    for (const Edge b : {Edge::of(1, 2), Edge::of(2, 3), Edge::of(1, 3)}) {
      out.push_back(perm_from_hcycle(LabelledHCycle{cycle, b}));
    }
    return out;
  }
  if (n % 2 == 0) return hcycle_family(vertices, three_matchings(n), {});

  // Odd n: reroute one edge of M1 and one of M2 to vertex n, scanning lexicographically.
  const std::array<Matching, 3> base = three_matchings(n - 1);
  const auto nv = static_cast<Vertex>(n);
  for (std::size_t e1 = 0; e1 < base[0].size(); ++e1) {
    for (const int keep1 : {0, 1}) {
      for (std::size_t e2 = 0; e2 < base[1].size(); ++e2) {
        for (const int keep2 : {0, 1}) {
          const Edge a = base[0][e1];
          const Edge b = base[1][e2];
          const Vertex x = keep1 == 0 ? a.lo : a.hi;
          const Vertex y = keep1 == 0 ? a.hi : a.lo;
          const Vertex u = keep2 == 0 ? b.lo : b.hi;
          const Vertex v = keep2 == 0 ? b.hi : b.lo;
          if (y == v || x == u) continue;
          std::array<Matching, 3> m = base;
          m[0][e1] = Edge::of(x, nv);
          m[1][e2] = Edge::of(u, nv);
          if (!edge_disjoint(m)) continue;
          const std::array<Vertex, 3> uncovered{y, v, nv};
          std::array<std::optional<Edge>, 3> closing;
          bool ok = true;
          for (std::size_t i = 0; i < 3 && ok; ++i) {
            ok = try_path(vertices, concat(m[i], m[(i + 1) % 3])).has_value();
            closing[i] = Edge::of(uncovered[i], uncovered[(i + 1) % 3]);
          }
          if (ok) return hcycle_family(vertices, m, closing);
        }
      }
    }
  }
  throw std::logic_error("no valid rerouting of the matchings for odd n");
}

DegreeGraph degree_graph(std::span<const Permutation> family) {
  const std::vector<Vertex> vertices = common_vertex_set(family);
  std::set<Edge> edges;
  for (const Permutation& p : family) edges.insert(Edge::of(p.front(), p.back()));
  DegreeGraph g;
  g.vertices = vertices;
  g.edges.assign(edges.begin(), edges.end());
  std::map<Vertex, std::size_t> degree;
  for (const Edge& e : g.edges) {
    g.max_degree = std::max(g.max_degree, ++degree[e.lo]);
    g.max_degree = std::max(g.max_degree, ++degree[e.hi]);
  }
  return g;
}

}  // namespace permsep
