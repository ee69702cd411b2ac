#include "permsep/merge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permsep {

namespace {

void check_pair(const LabelledGraph& w, std::size_t i, std::size_t j) {
  const auto grids = w.grids();
  if (i >= grids.size() || j >= grids.size()) throw std::out_of_range("grid index out of range");
  if (i == j) throw std::invalid_argument("cannot merge a grid with itself");
  if (grids[i].shape() != grids[j].shape()) {
    throw std::invalid_argument("merged grids must have the same shape");
  }
}

Grid adjoined_grid(const Grid& a, const Grid& b) {
  const std::size_t w = a.width();
  std::vector<Vertex> cells;
  cells.reserve(2 * a.cells().size());
  for (std::size_t r = 0; r < a.height(); ++r) {
    const auto ra = a.row(r);
    const auto rb = b.row(r);
    cells.insert(cells.end(), ra.begin(), ra.end());
    cells.insert(cells.end(), rb.begin(), rb.end());
  }
  return Grid(2 * w, a.height(), std::move(cells));
}

Grid rotated_grid(const Grid& a, const Grid& b) {
  const std::size_t h = a.height();
  std::vector<Vertex> cells(a.cells().begin(), a.cells().end());
  cells.reserve(2 * a.cells().size());
  for (std::size_t r = 0; r < h; ++r) {
    const auto rb = b.row(h - 1 - r);
    cells.insert(cells.end(), rb.rbegin(), rb.rend());
  }
  return Grid(a.width(), 2 * h, std::move(cells));
}

LabelledGraph rebuild(const LabelledGraph& w, std::vector<Grid> grids) {
  if (w.extra_edges().empty()) return LabelledGraph::trusted(std::move(grids), w.isolated());
  return LabelledGraph(std::move(grids), w.isolated(), w.extra_edges());
}

// Replaces the first grid of every pair by `merged[p]` and drops the second.
LabelledGraph apply_merges(const LabelledGraph& w,
                           std::span<const std::pair<std::size_t, std::size_t>> pairs,
                           std::vector<Grid> merged) {
  const auto grids = w.grids();
  constexpr std::size_t kKeep = static_cast<std::size_t>(-1);
  constexpr std::size_t kDrop = static_cast<std::size_t>(-2);
  std::vector<std::size_t> role(grids.size(), kKeep);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    role[pairs[p].first] = p;
    role[pairs[p].second] = kDrop;
  }
  std::vector<Grid> out;
  out.reserve(grids.size() - pairs.size());
  for (std::size_t t = 0; t < grids.size(); ++t) {
    if (role[t] == kKeep) {
      out.push_back(grids[t]);
    } else if (role[t] != kDrop) {
      out.push_back(std::move(merged[role[t]]));
    }
  }
  return rebuild(w, std::move(out));
}

void check_plan_pairs(const LabelledGraph& w,
                      std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<std::size_t> used;
  for (const auto& [i, j] : pairs) {
    check_pair(w, i, j);
    used.push_back(i);
    used.push_back(j);
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw std::invalid_argument("merge plan uses a grid twice");
  }
}

// Calls f(subset) for every size-s subset of [m] in lexicographic order.
template <class F>
void for_each_combination(std::size_t m, std::size_t s, F&& f) {
  std::vector<std::size_t> c(s);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    f(std::span<const std::size_t>(c));
    std::size_t t = s;
    while (t > 0 && c[t - 1] == m - s + (t - 1)) --t;
    if (t == 0) return;
    ++c[t - 1];
    for (std::size_t u = t; u < s; ++u) c[u] = c[u - 1] + 1;
  }
}

LabelledGraph merge_subset(const LabelledGraph& w,
                           std::span<const std::pair<std::size_t, std::size_t>> pairs,
                           std::span<const std::size_t> adjoined) {
  const auto grids = w.grids();
  std::vector<Grid> merged;
  merged.reserve(pairs.size());
  std::size_t next = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Grid& a = grids[pairs[p].first];
    const Grid& b = grids[pairs[p].second];
    if (next < adjoined.size() && adjoined[next] == p) {
      merged.push_back(adjoined_grid(a, b));
      ++next;
    } else {
      merged.push_back(rotated_grid(a, b));
    }
  }
  return apply_merges(w, pairs, std::move(merged));
}

BigInt checked_family_size(std::size_t m) {
  return binomial(static_cast<unsigned>(m), static_cast<unsigned>((m + 1) / 2));
}

}  // namespace

LabelledGraph adjoin(const LabelledGraph& w, std::size_t i, std::size_t j) {
  check_pair(w, i, j);
  const std::pair<std::size_t, std::size_t> pair{i, j};
  std::vector<Grid> merged{adjoined_grid(w.grids()[i], w.grids()[j])};
  return apply_merges(w, std::span(&pair, 1), std::move(merged));
}

LabelledGraph rotate_down(const LabelledGraph& w, std::size_t i, std::size_t j) {
  check_pair(w, i, j);
  const std::pair<std::size_t, std::size_t> pair{i, j};
  std::vector<Grid> merged{rotated_grid(w.grids()[i], w.grids()[j])};
  return apply_merges(w, std::span(&pair, 1), std::move(merged));
}

LabelledGraph multiple_merge(const LabelledGraph& w, const MergePlan& plan) {
  check_plan_pairs(w, plan.pairs);
  for (std::size_t t = 0; t < plan.adjoined.size(); ++t) {
    if (plan.adjoined[t] >= plan.pairs.size()) throw std::out_of_range("adjoined index out of range");
    if (t > 0 && plan.adjoined[t] <= plan.adjoined[t - 1]) {
      throw std::invalid_argument("adjoined indices must be strictly increasing");
    }
  }
  return merge_subset(w, plan.pairs, plan.adjoined);
}

std::vector<LabelledGraph> multiple_merge_family(
    const LabelledGraph& w, std::span<const std::pair<std::size_t, std::size_t>> pairs,
    std::size_t cap) {
  check_plan_pairs(w, pairs);
  const std::size_t m = pairs.size();
  if (checked_family_size(m) > cap) throw CapExceeded("multiple merge family exceeds the cap");
  std::vector<LabelledGraph> out;
  for_each_combination(m, (m + 1) / 2, [&](std::span<const std::size_t> subset) {
    out.push_back(merge_subset(w, pairs, subset));
  });
  return out;
}

ASequence a_sequence(std::size_t g) {
  if (g < 2) throw std::invalid_argument("a-sequence needs g >= 2");
  ASequence s{g, {}};
  std::size_t a = g - g % 2;
  while (a >= 2) {
    s.values.push_back(a);
    const std::size_t next = a / 4;
    a = next - next % 2;
  }
  return s;
}

FamilyStats family_stats(std::span<const LabelledGraph> family) {
  if (family.empty()) throw std::invalid_argument("family is empty");
  FamilyStats s;
  s.census = family.front().census();
  for (const LabelledGraph& g : family) {
    if (g.census() != s.census) throw std::invalid_argument("family members have different shape censuses");
  }
  s.family_size = family.size();
  s.grid_count = family.front().grids().size();
  s.value = s.family_size * pow2(s.grid_count);
  s.vertex_count = family.front().vertex_count();
  return s;
}

WidthDoubleSummary width_double_summary(Shape shape, std::size_t g) {
  WidthDoubleSummary s;
  s.shape = shape;
  s.g = g;
  s.sequence = a_sequence(g);
  s.family_size = 1;
  std::size_t pool = g;
  std::size_t h = shape.h;
  for (const std::size_t a : s.sequence.values) {
    if (pool > a) {
      s.produced[{shape.w, h}] += pool - a;
      s.leftover_grids += pool - a;
      s.leftover_vertices += (pool - a) * shape.w * h;
    }
    const std::size_t m = a / 2;
    const std::size_t adjoined = (m + 1) / 2;
    s.family_size *= binomial(static_cast<unsigned>(m), static_cast<unsigned>(adjoined));
    s.produced[{2 * shape.w, h}] += adjoined;
    s.wide_grids += adjoined;
    pool = m - adjoined;
    h *= 2;
  }
  if (pool > 0) {
    s.produced[{shape.w, h}] += pool;
    s.leftover_grids += pool;
    s.leftover_vertices += pool * shape.w * h;
  }
  return s;
}

namespace {

// A member under construction together with the grids still eligible for merging,
// identified by smallest vertex id.
struct PoolMember {
  LabelledGraph graph;
  std::vector<Vertex> pool;
};

std::vector<std::size_t> indices_of(const LabelledGraph& w, std::span<const Vertex> mins) {
  std::vector<std::size_t> idx;
  const auto grids = w.grids();
  for (const Vertex v : mins) {
    auto it = std::find_if(grids.begin(), grids.end(),
                           [&](const Grid& g) { return g.min_vertex() == v; });
    idx.push_back(static_cast<std::size_t>(it - grids.begin()));
  }
  return idx;
}

}  // namespace

WidthDoubleResult width_double(const LabelledGraph& w, std::span<const std::size_t> grid_indices,
                               std::size_t cap) {
  const auto grids = w.grids();
  if (grid_indices.size() < 2) throw std::invalid_argument("width doubling needs at least 2 grids");
  std::vector<std::size_t> sorted(grid_indices.begin(), grid_indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("width doubling grid indices repeat");
  }
  for (const std::size_t i : sorted) {
    if (i >= grids.size()) throw std::out_of_range("grid index out of range");
    if (grids[i].shape() != grids[sorted.front()].shape()) {
      throw std::invalid_argument("width doubling grids must share one shape");
    }
  }
  WidthDoubleResult result;
  result.summary = width_double_summary(grids[sorted.front()].shape(), sorted.size());
  if (result.summary.family_size > cap) throw CapExceeded("width doubling family exceeds the cap");

  std::vector<PoolMember> current;
  {
    std::vector<Vertex> pool;
    for (const std::size_t i : sorted) pool.push_back(grids[i].min_vertex());
    current.push_back({w, std::move(pool)});
  }
  for (const std::size_t a : result.summary.sequence.values) {
    std::vector<PoolMember> next;
    for (PoolMember& member : current) {
      std::sort(member.pool.begin(), member.pool.end());
      const std::vector<std::size_t> idx =
          indices_of(member.graph, std::span(member.pool).first(a));
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t t = 0; t + 1 < a; t += 2) pairs.emplace_back(idx[t], idx[t + 1]);
      const std::size_t m = pairs.size();
      for_each_combination(m, (m + 1) / 2, [&](std::span<const std::size_t> subset) {
        std::vector<Vertex> rotated;
        std::size_t s = 0;
        for (std::size_t p = 0; p < m; ++p) {
          if (s < subset.size() && subset[s] == p) {
            ++s;
          } else {
            rotated.push_back(member.pool[2 * p]);
          }
        }
        next.push_back({merge_subset(member.graph, pairs, subset), std::move(rotated)});
      });
    }
    current = std::move(next);
  }
  result.family.reserve(current.size());
  for (PoolMember& member : current) result.family.push_back(std::move(member.graph));
  return result;
}

CompleteDoubleResult complete_width_double(std::span<const LabelledGraph> family,
                                           std::size_t cap) {
  const FamilyStats input = family_stats(family);
  CompleteDoubleResult result;
  const CensusStep step = complete_width_double_census(input.census);
  if (step.multiplier * family.size() > cap) {
    throw CapExceeded("complete width doubling family exceeds the cap");
  }
  result.per_class = step.per_class;

  std::vector<LabelledGraph> out;
  for (const LabelledGraph& original : family) {
    std::vector<LabelledGraph> current{original};
    for (const auto& [shape, count] : input.census) {
      if (count < 2) continue;
      std::vector<Vertex> mins;
      for (const Grid& g : original.grids()) {
        if (g.shape() == shape) mins.push_back(g.min_vertex());
      }
      std::vector<LabelledGraph> next;
      for (const LabelledGraph& member : current) {
        // Original class grids are untouched so far; locate them by (min id, shape).
        std::vector<std::size_t> idx;
        const auto grids = member.grids();
        for (const Vertex v : mins) {
          auto it = std::find_if(grids.begin(), grids.end(), [&](const Grid& g) {
            return g.min_vertex() == v && g.shape() == shape;
          });
          idx.push_back(static_cast<std::size_t>(it - grids.begin()));
        }
        WidthDoubleResult wd = width_double(member, idx, cap);
        for (LabelledGraph& g : wd.family) next.push_back(std::move(g));
      }
      current = std::move(next);
    }
    for (LabelledGraph& g : current) out.push_back(std::move(g));
  }
  result.family = std::move(out);
  result.stats = family_stats(result.family);
  return result;
}

CensusStep complete_width_double_census(const Census& census) {
  CensusStep step;
  step.multiplier = 1;
  for (const auto& [shape, count] : census) {
    if (count < 2) {
      step.census[shape] += count;
      continue;
    }
    WidthDoubleSummary s = width_double_summary(shape, count);
    step.multiplier *= s.family_size;
    for (const auto& [sh, c] : s.produced) step.census[sh] += c;
    step.per_class.push_back(std::move(s));
  }
  return step;
}

}  // namespace permsep
