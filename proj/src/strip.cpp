#include "permsep/strip.hpp"

#include "permsep/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permsep {

bool StripParams::feasible() const {
  const long long s = side();
  const long long kk = k;
  const long long rr = r;
  const long long need = kk * kk + 4 * kk * rr + (1LL << (r - 1)) * kPlacementConstant * rr * rr;
  return s * s >= need;
}

void StripParams::validate() const {
  if (r < 2) throw std::invalid_argument("strip tiling needs r >= 2");
  if (k < r || k % r != 0) throw std::invalid_argument("strip tiling needs r to divide k");
  if (r > 30) throw std::invalid_argument("strip tiling needs r <= 30");
  if (!feasible()) throw std::invalid_argument("strip placement is infeasible for these parameters");
}

bool strip_edge_is_b(const StripParams& params, std::uint64_t index, std::size_t e) {
  const std::size_t edges = params.edge_count();
  if (e >= edges) throw std::out_of_range("strip edge index out of range");
  const std::size_t shift = edges - 1 - e;
  return shift < 64 && ((index >> shift) & 1ULL) != 0;
}

StripPlacement place_strip(const StripParams& params, std::uint64_t index) {
  params.validate();
  const std::size_t r = static_cast<std::size_t>(params.r);
  const std::size_t edges = params.edge_count();
  if (edges < 64 && index >> edges != 0) throw std::out_of_range("labelling index out of range");
  const int side = params.side();
  const std::size_t paths = params.path_count();

  // Type code = the path's label bits read along its orientation.
  std::vector<std::uint64_t> type(paths, 0);
  for (std::size_t p = 0; p < paths; ++p) {
    for (std::size_t q = 0; q + 1 < r; ++q) {
      type[p] = (type[p] << 1) | (strip_edge_is_b(params, index, p * (r - 1) + q) ? 1U : 0U);
    }
  }
  std::vector<std::size_t> order(paths);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return type[a] < type[b]; });

  StripPlacement out;
  out.side = side;
  out.host.assign(static_cast<std::size_t>(side) * side, 0);
  std::vector<int> rows(r);
  std::vector<int> cols(r);
  int band = 0;
  int t = 0;
  for (const std::size_t p : order) {
    bool placed = false;
    while (!placed) {
      if (band > 2 * (side - 1)) throw std::logic_error("strip placement ran out of bands");
      if (t > band) {
        band += params.r;
        t = 0;
        continue;
      }
      int row = t;
      int col = band - t;
      bool fits = true;
      for (std::size_t q = 0; q < r && fits; ++q) {
        if (q > 0) {
          if ((type[p] >> (r - 1 - q)) & 1U) {
            ++row;
          } else {
            ++col;
          }
        }
        fits = row < side && col < side &&
               out.host[static_cast<std::size_t>(row) * side + col] == 0;
        rows[q] = row;
        cols[q] = col;
      }
      ++t;
      if (!fits) continue;
      for (std::size_t q = 0; q < r; ++q) {
        out.host[static_cast<std::size_t>(rows[q]) * side + cols[q]] =
            static_cast<std::uint32_t>(p * r + q + 1);
      }
      placed = true;
    }
  }
  auto next = static_cast<std::uint32_t>(paths * r + 1);
  for (std::uint32_t& cell : out.host) {
    if (cell == 0) {
      cell = next++;
      ++out.fillers;
    }
  }
  return out;
}

std::vector<Permutation> strip_family(const StripParams& params, int jobs, std::size_t max_edges) {
  params.validate();
  const std::size_t edges = params.edge_count();
  if (edges > max_edges) {
    throw CapExceeded("strip family has 2^" + std::to_string(edges) + " members; above the cap");
  }
  const std::uint64_t total = 1ULL << edges;
  std::vector<std::vector<Vertex>> seqs(total);
  const auto count = static_cast<std::int64_t>(total);
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static) num_threads(kernels::omp::resolve_jobs(jobs))
  for (std::int64_t s = 0; s < count; ++s) {
    try {
      StripPlacement placement = place_strip(params, static_cast<std::uint64_t>(s));
      seqs[static_cast<std::size_t>(s)].assign(placement.host.begin(), placement.host.end());
    } catch (const std::logic_error&) {
      failed = true;
    }
  }
  if (failed) throw std::logic_error("strip placement failed for some labelling");
  std::vector<Permutation> out;
  out.reserve(total);
  for (auto& s : seqs) out.push_back(Permutation::trusted(std::move(s)));
  return out;
}

}  // namespace permsep
