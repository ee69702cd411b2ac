#pragma once

#include "permsep/permutation.hpp"
#include "permsep/types.hpp"
#include "permsep/verify.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace permsep {

struct Shape {
  std::size_t w = 1;
  std::size_t h = 1;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

using Census = std::map<Shape, std::size_t>;

/// A w x h lattice of vertex ids. Row 0 is the top, column 0 the left.
/// Horizontal neighbours carry label A, vertical neighbours label B.
class Grid {
 public:
  Grid(std::size_t w, std::size_t h, std::vector<Vertex> cells);

  std::size_t width() const noexcept { return w_; }
  std::size_t height() const noexcept { return h_; }
  Shape shape() const noexcept { return {w_, h_}; }
  Vertex at(std::size_t row, std::size_t col) const { return cells_[row * w_ + col]; }
  std::span<const Vertex> cells() const noexcept { return cells_; }
  std::span<const Vertex> row(std::size_t r) const {
    return std::span<const Vertex>(cells_).subspan(r * w_, w_);
  }
  Vertex min_vertex() const noexcept { return min_; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.w_ == b.w_ && a.h_ == b.h_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t w_;
  std::size_t h_;
  std::vector<Vertex> cells_;
  Vertex min_ = 0;
};

struct LabelledEdge {
  Edge edge;
  Label label = Label::A;
  friend auto operator<=>(const LabelledEdge&, const LabelledEdge&) = default;
};

/// Disjoint union of labelled grids, an optional isolated vertex, and any
/// extra labelled edges. Immutable once built.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  /// Validates vertex-disjointness and label consistency.
  LabelledGraph(std::vector<Grid> grids, std::optional<Vertex> isolated,
                std::map<Edge, Label> extra_edges = {});

  /// Skips validation; for operations that preserve the invariants by construction.
  static LabelledGraph trusted(std::vector<Grid> grids, std::optional<Vertex> isolated,
                               std::map<Edge, Label> extra_edges = {});

  std::span<const Grid> grids() const noexcept { return grids_; }
  std::optional<Vertex> isolated() const noexcept { return isolated_; }
  const std::map<Edge, Label>& extra_edges() const noexcept { return extra_; }

  /// Every labelled edge (grid-implied plus extra), sorted by edge.
  std::vector<LabelledEdge> edge_labels() const;
  /// All vertex ids in ascending order.
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;
  Census census() const;
  /// Common grid width, or nullopt when there are no grids or widths differ.
  std::optional<std::size_t> uniform_width() const;

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  void validate() const;

  std::vector<Grid> grids_;
  std::optional<Vertex> isolated_;
  std::map<Edge, Label> extra_;
};

/// Some pair carries opposite labels in the two graphs.
bool compatible(const LabelledGraph& w1, const LabelledGraph& w2);

/// Same, on precomputed sorted edge_labels() lists.
bool compatible_edges(std::span<const LabelledEdge> e1, std::span<const LabelledEdge> e2);

/// Exhaustive pairwise compatibility report with a deterministic first witness.
FamilyReport pairwise_compatible(std::span<const LabelledGraph> family, int jobs = 0);

/// Z-swapping: start at the isolated vertex, then visit the grids in list
/// order; every row of grid i is read right-to-left when bits[i] == 1 and
/// left-to-right otherwise, rows top to bottom. A-edges end up at distance 1
/// and B-edges at distance w.
Permutation z_swap(const LabelledGraph& w, std::span<const std::uint8_t> bits);

/// All 2^g Z-swap paths, bit sequences in lexicographic order (bits[0] most
/// significant). Requires a common width >= 2 so that the paths are distinct.
std::vector<Permutation> z_swap_all(const LabelledGraph& w, int jobs = 0,
                                    std::size_t max_grids = 30);

/// Hamiltonian cycle in which exactly one edge is labelled B.
struct LabelledHCycle {
  std::vector<Vertex> cycle;
  Edge b_edge;
};

/// Path edges become A; the closing edge {first, last} becomes B.
LabelledHCycle hcycle_from_perm(const Permutation& p);
/// Cuts the cycle at its B edge.
Permutation perm_from_hcycle(const LabelledHCycle& c);
LabelledGraph to_labelled_graph(const LabelledHCycle& c);

}  // namespace permsep
