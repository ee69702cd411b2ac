#pragma once

// Pair-scanning kernels. Every kernel has a plain serial version, which is the
// reference the tests compare against, and an OpenMP version whose result
// does not depend on the thread count.

#include "permsep/permutation.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace permsep::kernels {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Dense positional index of a family over its compacted common vertex set.
class FamilyIndex {
 public:
  explicit FamilyIndex(std::span<const Permutation> family);

  std::size_t members() const noexcept { return members_; }
  std::size_t n() const noexcept { return n_; }

  /// Some pair adjacent in one member sits at positional distance `distance` in the other.
  bool separated(std::size_t i, std::size_t j, std::uint32_t distance) const noexcept {
    return hits(i, j, distance) || hits(j, i, distance);
  }

 private:
  bool hits(std::size_t from, std::size_t to, std::uint32_t distance) const noexcept {
    const std::uint32_t* seq = seq_.data() + from * n_;
    const std::uint32_t* pos = pos_.data() + to * n_;
    for (std::size_t t = 0; t + 1 < n_; ++t) {
      const std::uint32_t a = pos[seq[t]];
      const std::uint32_t b = pos[seq[t + 1]];
      if ((a > b ? a - b : b - a) == distance) return true;
    }
    return false;
  }

  std::size_t n_ = 0;
  std::size_t members_ = 0;
  std::vector<std::uint32_t> seq_;  // member-major compact ids
  std::vector<std::uint32_t> pos_;  // member-major position of each compact id
};

struct PairScan {
  std::uint64_t checked = 0;
  std::optional<IndexPair> first_failure;
};

/// Counter-based splitmix64; the t-th draw depends only on (seed, t).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// The t-th sampled pair (i < j) of a family with m >= 2 members.
inline IndexPair sampled_pair(std::uint64_t seed, std::uint64_t t, std::size_t m) {
  const std::uint64_t h1 = splitmix64(seed ^ splitmix64(2 * t));
  const std::uint64_t h2 = splitmix64(seed ^ splitmix64(2 * t + 1));
  const std::size_t i = static_cast<std::size_t>(h1 % m);
  std::size_t j = static_cast<std::size_t>(h2 % (m - 1));
  if (j >= i) ++j;
  return i < j ? IndexPair{i, j} : IndexPair{j, i};
}

inline constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();

namespace serial {

/// Checks every pair i < j; reports the lexicographically first failing pair.
template <class PairOk>
PairScan scan_all_pairs(std::size_t m, PairOk&& ok) {
  PairScan out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      ++out.checked;
      if (!out.first_failure && !ok(i, j)) out.first_failure = IndexPair{i, j};
    }
  }
  return out;
}

template <class PairOk>
PairScan scan_sampled(std::size_t m, std::uint64_t seed, std::uint64_t count, PairOk&& ok) {
  PairScan out;
  if (m < 2) return out;
  for (std::uint64_t t = 0; t < count; ++t) {
    const IndexPair p = sampled_pair(seed, t, m);
    ++out.checked;
    if (!out.first_failure && !ok(p.first, p.second)) out.first_failure = p;
  }
  return out;
}

/// Row-major symmetric bitset; bit j of row i is pred(i, j) for i != j.
template <class Adjacent>
void fill_adjacency(std::size_t m, std::size_t words, std::uint64_t* rows, Adjacent&& adjacent) {
  std::fill(rows, rows + m * words, 0ULL);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (adjacent(i, j)) {
        rows[i * words + j / 64] |= 1ULL << (j % 64);
        rows[j * words + i / 64] |= 1ULL << (i % 64);
      }
    }
  }
}

}  // namespace serial

namespace omp {

inline int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

template <class PairOk>
PairScan scan_all_pairs(std::size_t m, PairOk&& ok, int jobs = 0) {
  PairScan out;
  if (m < 2) return out;
  out.checked = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  std::uint64_t best = kNoFailure;  // i * m + j of the first failure
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve_jobs(jobs)) reduction(min : best)
  for (std::int64_t si = 0; si < rows; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!ok(i, j)) best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(i) * m + j);
    }
  }
  if (best != kNoFailure) out.first_failure = IndexPair{best / m, best % m};
  return out;
}

template <class PairOk>
PairScan scan_sampled(std::size_t m, std::uint64_t seed, std::uint64_t count, PairOk&& ok,
                      int jobs = 0) {
  PairScan out;
  if (m < 2) return out;
  out.checked = count;
  std::uint64_t best = kNoFailure;  // sample index of the first failure
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) num_threads(resolve_jobs(jobs)) reduction(min : best)
  for (std::int64_t st = 0; st < total; ++st) {
    const auto t = static_cast<std::uint64_t>(st);
    const IndexPair p = sampled_pair(seed, t, m);
    if (!ok(p.first, p.second)) best = std::min(best, t);
  }
  if (best != kNoFailure) out.first_failure = sampled_pair(seed, best, m);
  return out;
}

/// Each row is computed independently (both triangles), so threads never share a word.
template <class Adjacent>
void fill_adjacency(std::size_t m, std::size_t words, std::uint64_t* rows, Adjacent&& adjacent,
                    int jobs = 0) {
  const auto total = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_jobs(jobs))
  for (std::int64_t si = 0; si < total; ++si) {
    const auto i = static_cast<std::size_t>(si);
    std::uint64_t* row = rows + i * words;
    std::fill(row, row + words, 0ULL);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && adjacent(i, j)) row[j / 64] |= 1ULL << (j % 64);
    }
  }
}

}  // namespace omp

}  // namespace permsep::kernels
