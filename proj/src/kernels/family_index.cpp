#include "permsep/kernels.hpp"

#include <algorithm>

namespace permsep::kernels {

FamilyIndex::FamilyIndex(std::span<const Permutation> family) {
  const std::vector<Vertex> set = common_vertex_set(family);
  n_ = set.size();
  members_ = family.size();
  seq_.resize(n_ * members_);
  pos_.resize(n_ * members_);
  for (std::size_t m = 0; m < members_; ++m) {
    const Permutation& p = family[m];
    for (std::size_t i = 0; i < n_; ++i) {
      const auto id = static_cast<std::uint32_t>(
          std::lower_bound(set.begin(), set.end(), p[i]) - set.begin());
      seq_[m * n_ + i] = id;
      pos_[m * n_ + id] = static_cast<std::uint32_t>(i);
    }
  }
}

}  // namespace permsep::kernels
