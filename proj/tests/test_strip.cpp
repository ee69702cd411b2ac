#include "permsep/strip.hpp"
#include "permsep/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace permsep {
namespace {

using testing::Rng;

// Checks one placement straight from the host cells.
void expect_placement_invariants(const StripParams& params, std::uint64_t index) {
  const StripPlacement pl = place_strip(params, index);
  const auto side = static_cast<std::size_t>(pl.side);
  ASSERT_EQ(pl.host.size(), side * side);
  std::map<std::uint32_t, std::size_t> cell;
  for (std::size_t c = 0; c < pl.host.size(); ++c) cell[pl.host[c]] = c;
  ASSERT_EQ(cell.size(), side * side);
  EXPECT_EQ(cell.begin()->first, 1U);
  EXPECT_EQ(cell.rbegin()->first, side * side);
  const auto r = static_cast<std::size_t>(params.r);
  for (std::size_t p = 0; p < params.path_count(); ++p) {
    for (std::size_t q = 0; q + 1 < r; ++q) {
      const std::size_t a = cell.at(static_cast<std::uint32_t>(p * r + q + 1));
      const std::size_t b = cell.at(static_cast<std::uint32_t>(p * r + q + 2));
      if (strip_edge_is_b(params, index, p * (r - 1) + q)) {
        EXPECT_EQ(b, a + side);
      } else {
        EXPECT_EQ(b, a + 1);
        EXPECT_EQ(a / side, b / side);
      }
    }
  }
  EXPECT_EQ(pl.fillers, side * side - params.path_count() * r);
  // Fillers are numbered in row-major order.
  std::uint32_t last = 0;
  for (const std::uint32_t v : pl.host) {
    if (v > params.path_count() * r) {
      EXPECT_GT(v, last);
      last = v;
    }
  }
}

TEST(StripParamsTest, FeasibilityAndValidation) {
  EXPECT_TRUE((StripParams{2, 4}.feasible()));
  EXPECT_TRUE((StripParams{2, 6}.feasible()));
  EXPECT_TRUE((StripParams{3, 12}.feasible()));
  EXPECT_FALSE((StripParams{3, 6}.feasible()));
  EXPECT_FALSE((StripParams{4, 8}.feasible()));
  EXPECT_EQ((StripParams{2, 4}.side()), 10);
  EXPECT_EQ((StripParams{2, 4}.edge_count()), 8U);
  EXPECT_THROW((StripParams{1, 4}.validate()), std::invalid_argument);
  EXPECT_THROW((StripParams{3, 4}.validate()), std::invalid_argument);
  EXPECT_THROW((StripParams{3, 6}.validate()), std::invalid_argument);
  EXPECT_THROW(place_strip(StripParams{2, 4}, 256), std::out_of_range);
  EXPECT_THROW(strip_family(StripParams{2, 6}, 0, 16), CapExceeded);
}

TEST(StripTest, TwoFourFamily) {
  const StripParams params{2, 4};
  const auto f = strip_family(params);
  ASSERT_EQ(f.size(), 256U);
  for (const Permutation& p : f) ASSERT_EQ(p.size(), 100U);
  EXPECT_EQ(common_vertex_set(f), testing::iota_ids(100));
  EXPECT_TRUE(verify_family(f, params.side() + 1).ok);
  EXPECT_TRUE(testing::oracle_family_ok(std::vector<Permutation>(f.begin(), f.begin() + 24),
                                        params.side() + 1));
  std::set<Permutation> distinct(f.begin(), f.end());
  EXPECT_EQ(distinct.size(), f.size());
  EXPECT_EQ(strip_family(params, 1), f);
  for (std::uint64_t s = 0; s < 256; ++s) expect_placement_invariants(params, s);
}

TEST(StripTest, AllALabellingStartsTopLeft) {
  // Every path horizontal; the first path sits in the top-left corner.
  const StripPlacement pl = place_strip(StripParams{2, 4}, 0);
  EXPECT_EQ(pl.host[0], 1U);
  EXPECT_EQ(pl.host[1], 2U);
}

TEST(StripProperty, RandomLabellingsLargerHosts) {
  Rng rng(41);
  for (const StripParams params : {StripParams{2, 6}, StripParams{3, 12}}) {
    std::vector<std::uint64_t> indices;
    const std::size_t edges = params.edge_count();
    for (int i = 0; i < 30; ++i) {
      const std::uint64_t x = rng();
      indices.push_back(edges >= 64 ? x : x & ((1ULL << edges) - 1));
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    std::vector<Permutation> f;
    for (const std::uint64_t s : indices) {
      expect_placement_invariants(params, s);
      const StripPlacement pl = place_strip(params, s);
      f.push_back(Permutation(std::vector<Vertex>(pl.host.begin(), pl.host.end())));
    }
    EXPECT_TRUE(verify_family(f, params.side() + 1).ok) << params.r << "," << params.k;
  }
}

}  // namespace
}  // namespace permsep
