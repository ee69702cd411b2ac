#pragma once

#include "permsep/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace permsep {

struct StripParams {
  int r = 2;  // vertices per path
  int k = 2;  // r divides k; k*k/r paths
  static constexpr int kPlacementConstant = 4;

  int side() const { return k + 3 * r; }
  std::size_t path_count() const { return static_cast<std::size_t>(k) * k / r; }
  std::size_t edge_count() const { return path_count() * (r - 1); }
  /// side^2 >= k^2 + 4kr + 2^(r-1) * c * r^2
  bool feasible() const;
  void validate() const;
};

/// Cell assignment of one labelling: host[row * side + col] = vertex id.
struct StripPlacement {
  int side = 0;
  std::vector<std::uint32_t> host;
  std::size_t fillers = 0;
};

/// Places the labelled paths of labelling `index` (bit e set = edge e labelled B,
/// edge 0 most significant) as staircases in the host grid. Path p owns vertices
/// p*r+1 .. p*r+r; fillers take ids k^2+1 .. side^2 in row-major order.
StripPlacement place_strip(const StripParams& params, std::uint64_t index);

/// Label of edge e under labelling `index` (true = B). With 64 or more edges
/// only the last 64 are addressable; earlier edges read as A.
bool strip_edge_is_b(const StripParams& params, std::uint64_t index, std::size_t e);

/// All 2^((r-1)k^2/r) row-major host readings; pairwise (side+1)-neighbor separated.
std::vector<Permutation> strip_family(const StripParams& params, int jobs = 0,
                                      std::size_t max_edges = 24);

}  // namespace permsep
