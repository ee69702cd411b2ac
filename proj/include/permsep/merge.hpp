#pragma once

#include "permsep/bigint.hpp"
#include "permsep/labelled_graph.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace permsep {

inline constexpr std::size_t kDefaultGraphCap = 1'000'000;

/// Grids i and j (same shape) become one grid of width 2w whose rows are
/// row_i ++ row_j. The merged grid takes the list position of grid i.
LabelledGraph adjoin(const LabelledGraph& w, std::size_t i, std::size_t j);

/// Grid j is rotated by 180 degrees and stacked under grid i: width w, height 2h.
/// Bottom row cell c of i gains a B edge to bottom row cell w-1-c of the original j.
LabelledGraph rotate_down(const LabelledGraph& w, std::size_t i, std::size_t j);

struct MergePlan {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Sorted indices into `pairs` that are adjoined; the rest are rotated down.
  std::vector<std::size_t> adjoined;
};

LabelledGraph multiple_merge(const LabelledGraph& w, const MergePlan& plan);

/// One graph per subset of size ceil(m/2) of the m pairs, subsets in lexicographic order.
std::vector<LabelledGraph> multiple_merge_family(
    const LabelledGraph& w, std::span<const std::pair<std::size_t, std::size_t>> pairs,
    std::size_t cap = kDefaultGraphCap);

/// a_0 = largest even <= g; a_{j+1} = largest even <= floor(a_j / 4), while that is >= 2.
struct ASequence {
  std::size_t g = 0;
  std::vector<std::size_t> values;
};

ASequence a_sequence(std::size_t g);

struct FamilyStats {
  BigInt family_size;
  std::size_t grid_count = 0;
  Census census;
  BigInt value;  // family_size * 2^grid_count
  std::size_t vertex_count = 0;
};

/// Requires every member to have the same census.
FamilyStats family_stats(std::span<const LabelledGraph> family);

/// Shape bookkeeping of one width doubling on g grids of one shape, without enumeration.
struct WidthDoubleSummary {
  Shape shape;
  std::size_t g = 0;
  ASequence sequence;
  BigInt family_size;            // prod_j C(a_j/2, floor(a_j/4))
  std::size_t wide_grids = 0;    // sum_j ceil(a_j/4), all of width 2w
  std::size_t leftover_grids = 0;
  std::size_t leftover_vertices = 0;  // vertices still in width-w grids
  Census produced;               // census of the grids covering the input grids' vertices
};

WidthDoubleSummary width_double_summary(Shape shape, std::size_t g);

struct WidthDoubleResult {
  std::vector<LabelledGraph> family;
  WidthDoubleSummary summary;
};

/// Width doubling of the grids at `grid_indices` (all one shape, at least 2).
/// Within a step, pool grids are ordered by smallest vertex id and paired
/// consecutively; an unpaired grid stays untouched.
WidthDoubleResult width_double(const LabelledGraph& w, std::span<const std::size_t> grid_indices,
                               std::size_t cap = kDefaultGraphCap);

struct CompleteDoubleResult {
  std::vector<LabelledGraph> family;
  std::vector<WidthDoubleSummary> per_class;
  FamilyStats stats;
};

/// Width doubling applied to each shape class in (w, h) order, for every member.
/// Classes with fewer than two grids pass through.
CompleteDoubleResult complete_width_double(std::span<const LabelledGraph> family,
                                           std::size_t cap = kDefaultGraphCap);

/// Census-level counterpart of complete_width_double.
struct CensusStep {
  BigInt multiplier;
  Census census;
  std::vector<WidthDoubleSummary> per_class;
};

CensusStep complete_width_double_census(const Census& census);

}  // namespace permsep
