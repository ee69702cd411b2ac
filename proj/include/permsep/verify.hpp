#pragma once

#include "permsep/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace permsep {

struct VerifyMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static VerifyMode exhaustive() { return {}; }
  static VerifyMode sampled(std::uint64_t seed, std::uint64_t count) {
    return {Kind::Sampled, seed, count};
  }
};

struct FamilyReport {
  std::size_t family_size = 0;
  std::uint64_t pairs_checked = 0;
  VerifyMode mode;
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks that the family is pairwise k-neighbor separated.
///
/// Exhaustive mode checks all C(m, 2) pairs. Sampled mode draws `count` pairs
/// from a counter-based generator, so the pairs depend only on (seed, m).
/// The witness is the first failing pair in that deterministic order; it does
/// not depend on `jobs` (0 = OpenMP default, 1 = serial reference kernel).
FamilyReport verify_family(std::span<const Permutation> family, int k,
                           VerifyMode mode = VerifyMode::exhaustive(), int jobs = 0);

}  // namespace permsep
