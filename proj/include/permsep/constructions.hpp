#pragma once

#include "permsep/bigint.hpp"
#include "permsep/labelled_graph.hpp"
#include "permsep/merge.hpp"
#include "permsep/permutation.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace permsep {

/// All (n-1)! Hamiltonian paths of K_n through the edge {1,2}, one
/// representative per path (first < last), in lexicographic order. 2 <= n <= 8.
std::vector<Permutation> fixed_edge_family(int n);

/// n/2 edge-disjoint Hamiltonian paths covering K_n (n even, n >= 4): the path
/// 1, n, 2, n-1, ... and its rotations under v -> v mod n + 1.
std::vector<Permutation> ham_decomposition(int n);

/// n Hamiltonian paths H_i = M_i u M_{i+(n-1)/2} built from rotations of the
/// matching M_1 = {(2,n), (3,n-1), ...}; their edge-sharing graph is C_n (n odd, n >= 5).
std::vector<Permutation> ham_cover(int n);

/// One alternating path per balanced bipartition of [n], 3 <= n <= 14.
std::vector<Permutation> balanced_family(int n);

/// Orders a Hamiltonian path given as an edge set; result has first < last.
/// Throws unless the edges form a single path through all of `vertices`.
Permutation path_from_edges(std::span<const Vertex> vertices, std::span<const Edge> edges);

struct PaddedGraph {
  LabelledGraph graph;
  std::size_t fresh = 0;
};

/// Widens every grid narrower than target_w by appending fresh vertices to
/// each row. Fresh ids count up from first_fresh (default: max vertex + 1)
/// in grid order, row by row.
PaddedGraph pad_to_width(const LabelledGraph& w, std::size_t target_w,
                         std::optional<Vertex> first_fresh = std::nullopt);

struct Pow2Options {
  std::size_t cap = 1'000'000;  // max permutations to enumerate
  bool count_only = false;
  int jobs = 0;
};

struct Pow2Result {
  int n = 0;
  int ell = 0;
  int k = 0;             // 2^ell + 1
  std::size_t n_prime = 0;
  std::size_t fresh = 0;
  FamilyStats stats;     // of the padded family; stats.value is the permutation count
  std::vector<LabelledGraph> graphs;
  std::vector<Permutation> family;  // empty in count-only mode
};

/// Isolated vertex 1 plus unit grids 2..n, complete width doubling ell times,
/// padding to width 2^ell, then Z-swapping every member.
Pow2Result pow2_family(int n, int ell, const Pow2Options& options = {});

using Matching = std::vector<Edge>;

/// Three perfect matchings of [n] (n even, n >= 4) whose pairwise unions are Hamiltonian cycles.
std::array<Matching, 3> three_matchings(int n);

/// Cyclic order of a 2-regular connected edge set; throws if it is not a Hamiltonian cycle.
std::vector<Vertex> cycle_from_edges(std::span<const Vertex> vertices,
                                     std::span<const Edge> edges);

/// 3n/2 (n even) or 3(n-1)/2 (n odd) pairwise n-neighbor separated permutations of [n].
std::vector<Permutation> pnn_family(int n);

struct DegreeGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // distinct {first, last} pairs, sorted
  std::size_t max_degree = 0;
};

/// Graph of the B edges {first, last} of the members' labelled H-cycles.
DegreeGraph degree_graph(std::span<const Permutation> family);

}  // namespace permsep
