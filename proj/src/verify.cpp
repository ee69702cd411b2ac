#include "permsep/verify.hpp"

#include "permsep/kernels.hpp"

#include <stdexcept>
#include <string>

namespace permsep {

FamilyReport verify_family(std::span<const Permutation> family, int k, VerifyMode mode, int jobs) {
  const kernels::FamilyIndex index(family);  // throws on empty / mismatched sets
  if (k < 2 || static_cast<std::size_t>(k) > index.n()) {
    throw std::out_of_range("k must satisfy 2 <= k <= n (k=" + std::to_string(k) + ")");
  }
  const auto d = static_cast<std::uint32_t>(k - 1);
  auto ok = [&](std::size_t i, std::size_t j) { return index.separated(i, j, d); };

  kernels::PairScan scan;
  const std::size_t m = index.members();
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    scan = jobs == 1 ? kernels::serial::scan_all_pairs(m, ok)
                     : kernels::omp::scan_all_pairs(m, ok, jobs);
  } else {
    scan = jobs == 1 ? kernels::serial::scan_sampled(m, mode.seed, mode.count, ok)
                     : kernels::omp::scan_sampled(m, mode.seed, mode.count, ok, jobs);
  }

  FamilyReport report;
  report.family_size = m;
  report.pairs_checked = scan.checked;
  report.mode = mode;
  report.ok = !scan.first_failure.has_value();
  report.witness = scan.first_failure;
  return report;
}

}  // namespace permsep
