#pragma once

#include "permsep/types.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace permsep {

/// Sorted, duplicate-free set of unordered vertex pairs.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::vector<Edge> edges);
  PairSet(std::initializer_list<Edge> edges) : PairSet(std::vector<Edge>(edges)) {}

  bool contains(Edge e) const;
  bool intersects(const PairSet& other) const;

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// An ordering of distinct vertex ids. Ids are arbitrary (not necessarily 1..n).
class Permutation {
 public:
  explicit Permutation(std::vector<Vertex> seq);
  Permutation(std::initializer_list<Vertex> seq) : Permutation(std::vector<Vertex>(seq)) {}

  /// Skips the duplicate check; the caller guarantees distinct ids.
  static Permutation trusted(std::vector<Vertex> seq);

  std::size_t size() const noexcept { return seq_.size(); }
  Vertex operator[](std::size_t i) const { return seq_[i]; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  std::span<const Vertex> seq() const noexcept { return seq_; }

  /// Vertex ids in ascending order.
  std::vector<Vertex> vertex_set() const;
  Permutation reversed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct TrustedTag {};
  Permutation(std::vector<Vertex> seq, TrustedTag) : seq_(std::move(seq)) {}

  std::vector<Vertex> seq_;
};

/// The n-1 pairs at positional distance 1.
PairSet neighbor_pairs(const Permutation& p);

/// The n-k+1 pairs at positional distance k-1. Requires 2 <= k <= n.
PairSet separated_pairs(const Permutation& p, int k);

/// True iff some pair is adjacent in one permutation and at distance k-1 in the other.
bool is_k_separated(const Permutation& p, const Permutation& q, int k);

/// Neighbor pairs (a) and distance-(k-1) pairs (b) of one permutation.
struct SetPair {
  PairSet a;
  PairSet b;
  int k = 2;
};

SetPair to_set_pair(const Permutation& p, int k);

/// s.a meets t.b, or t.a meets s.b.
bool weakly_cross_intersecting(const SetPair& s, const SetPair& t);

/// Whether the union of the two Hamiltonian paths is non-bipartite.
bool union_contains_odd_cycle(const Permutation& p, const Permutation& q);

/// All |f1|*|f2| concatenations p1 ++ p2, f1-major order. Vertex sets must be disjoint.
std::vector<Permutation> product_family(std::span<const Permutation> f1,
                                        std::span<const Permutation> f2);

/// Throws std::invalid_argument unless every member has the same vertex set.
/// Returns that vertex set in ascending order.
std::vector<Vertex> common_vertex_set(std::span<const Permutation> family);

}  // namespace permsep
