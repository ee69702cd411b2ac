#include "permsep/labelled_graph.hpp"
#include "permsep/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace permsep {
namespace {

using testing::Rng;

LabelledGraph two_by_two() {
  // isolated 0; grid [[1,2],[3,4]]
  return LabelledGraph({Grid(2, 2, {1, 2, 3, 4})}, Vertex{0});
}

TEST(GridTest, Validation) {
  EXPECT_THROW(Grid(0, 1, {}), std::invalid_argument);
  EXPECT_THROW(Grid(2, 1, {1}), std::invalid_argument);
  EXPECT_THROW(Grid(2, 1, {1, 1}), std::invalid_argument);
  const Grid g(3, 2, {6, 5, 4, 3, 2, 9});
  EXPECT_EQ(g.min_vertex(), 2U);
  EXPECT_EQ(g.at(1, 2), 9U);
  EXPECT_EQ(g.row(1)[0], 3U);
}

TEST(LabelledGraphTest, Validation) {
  EXPECT_THROW(LabelledGraph({Grid(1, 1, {1}), Grid(1, 1, {1})}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(LabelledGraph({Grid(1, 1, {1})}, Vertex{1}), std::invalid_argument);
  std::map<Edge, Label> bad{{Edge::of(1, 2), Label::B}};
  EXPECT_THROW(LabelledGraph({Grid(2, 1, {1, 2})}, std::nullopt, bad), std::invalid_argument);
  std::map<Edge, Label> same{{Edge::of(1, 2), Label::A}};
  EXPECT_NO_THROW(LabelledGraph({Grid(2, 1, {1, 2})}, std::nullopt, same));
}

TEST(LabelledGraphTest, EdgeLabelsAndCensus) {
  const LabelledGraph g = two_by_two();
  const auto labels = g.edge_labels();
  ASSERT_EQ(labels.size(), 4U);
  EXPECT_EQ(labels[0], (LabelledEdge{Edge::of(1, 2), Label::A}));
  EXPECT_EQ(labels[1], (LabelledEdge{Edge::of(1, 3), Label::B}));
  EXPECT_EQ(labels[2], (LabelledEdge{Edge::of(2, 4), Label::B}));
  EXPECT_EQ(labels[3], (LabelledEdge{Edge::of(3, 4), Label::A}));
  EXPECT_EQ(g.vertex_count(), 5U);
  EXPECT_EQ(g.census(), (Census{{Shape{2, 2}, 1}}));
  EXPECT_EQ(g.uniform_width(), 2U);
}

TEST(LabelledGraphTest, CompatibilityExamples) {
  // Adjoin vs rotate-down results of [[1,2]] and [[3,4]] disagree on {2,3}.
  const LabelledGraph w1({Grid(4, 1, {1, 2, 3, 4})}, Vertex{0});
  const LabelledGraph w2({Grid(2, 2, {1, 2, 4, 3})}, Vertex{0});
  EXPECT_TRUE(compatible(w1, w2));
  EXPECT_FALSE(compatible(w1, w1));
  const LabelledGraph apart({Grid(2, 1, {1, 2}), Grid(2, 1, {3, 4})}, Vertex{0});
  EXPECT_FALSE(compatible(apart, w1));
}

TEST(ZSwapTest, ExamplesAndDistances) {
  const LabelledGraph g = two_by_two();
  EXPECT_EQ(z_swap(g, std::vector<std::uint8_t>{0}), (Permutation{0, 1, 2, 3, 4}));
  EXPECT_EQ(z_swap(g, std::vector<std::uint8_t>{1}), (Permutation{0, 2, 1, 4, 3}));
  EXPECT_THROW(z_swap(g, std::vector<std::uint8_t>{}), std::invalid_argument);
  const auto all = z_swap_all(g);
  ASSERT_EQ(all.size(), 2U);
  EXPECT_TRUE(verify_family(all, 3).ok);
  const LabelledGraph narrow({Grid(1, 2, {1, 2})}, Vertex{0});
  EXPECT_THROW(z_swap_all(narrow), std::invalid_argument);
  const LabelledGraph ragged({Grid(2, 1, {1, 2}), Grid(3, 1, {3, 4, 5})}, Vertex{0});
  EXPECT_THROW(z_swap_all(ragged), std::invalid_argument);
  const LabelledGraph lone({}, Vertex{7});
  ASSERT_EQ(z_swap_all(lone).size(), 1U);
}

TEST(ZSwapProperty, PositionalDistances) {
  Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const LabelledGraph g = testing::random_uniform_graph(rng, 6, 4, 4);
    const std::size_t w = g.uniform_width().value_or(2);
    const auto paths = z_swap_all(g, 1);
    ASSERT_EQ(paths.size(), std::size_t{1} << g.grids().size());
    for (const Permutation& p : paths) {
      ASSERT_EQ(p.front(), *g.isolated());
      const auto pos = testing::positions(p);
      for (const auto& [edge, label] : testing::oracle_labels(g)) {
        const long d = std::labs(pos.at(edge.first) - pos.at(edge.second));
        ASSERT_EQ(d, label == 'a' ? 1L : static_cast<long>(w));
      }
    }
    EXPECT_EQ(z_swap_all(g, 3), paths);
  }
}

TEST(ZSwapProperty, CompatibleGraphsGiveSeparatedPaths) {
  Rng rng(22);
  int compatible_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Same vertex set, two independent grid arrangements of width 2.
    const std::size_t g = testing::uniform(rng, 1, 3);
    std::vector<Vertex> ids = testing::iota_ids(1 + 2 * 2 * g);
    auto make = [&]() {
      std::shuffle(ids.begin() + 1, ids.end(), rng);
      std::vector<Grid> grids;
      for (std::size_t i = 0; i < g; ++i) {
        grids.emplace_back(2, 2, std::vector<Vertex>(ids.begin() + 1 + 4 * i, ids.begin() + 5 + 4 * i));
      }
      return LabelledGraph(std::move(grids), ids.front());
    };
    const LabelledGraph a = make();
    const LabelledGraph b = make();
    EXPECT_EQ(compatible(a, b), testing::oracle_compatible(a, b));
    if (!compatible(a, b)) continue;
    ++compatible_pairs;
    for (const Permutation& p : z_swap_all(a)) {
      for (const Permutation& q : z_swap_all(b)) EXPECT_TRUE(is_k_separated(p, q, 3));
    }
  }
  EXPECT_GT(compatible_pairs, 20);
}

TEST(PairwiseCompatibleTest, ReportsFirstFailure) {
  const LabelledGraph w1({Grid(4, 1, {1, 2, 3, 4})}, Vertex{0});
  const LabelledGraph w2({Grid(2, 2, {1, 2, 4, 3})}, Vertex{0});
  const std::vector<LabelledGraph> ok{w1, w2};
  EXPECT_TRUE(pairwise_compatible(ok).ok);
  const std::vector<LabelledGraph> bad{w1, w2, w1};
  const FamilyReport r = pairwise_compatible(bad, 1);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(*r.witness, (std::pair<std::size_t, std::size_t>{0, 2}));
  EXPECT_EQ(pairwise_compatible(bad, 2).witness, r.witness);
  EXPECT_EQ(r.pairs_checked, 3U);
}

TEST(HCycleTest, RoundTrip) {
  const Permutation p{3, 1, 4, 2, 5};
  const LabelledHCycle c = hcycle_from_perm(p);
  EXPECT_EQ(c.b_edge, Edge::of(3, 5));
  const Permutation back = perm_from_hcycle(c);
  EXPECT_TRUE(back == p || back == p.reversed());
  const LabelledGraph g = to_labelled_graph(c);
  EXPECT_EQ(g.edge_labels().size(), 5U);
  EXPECT_THROW(perm_from_hcycle(LabelledHCycle{{1, 2, 3, 4}, Edge::of(1, 3)}), std::invalid_argument);
}

TEST(HCycleProperty, CompatibilityMatchesSeparationAtKEqualsN) {
  Rng rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = testing::uniform(rng, 3, 9);
    const Permutation p = testing::random_permutation(rng, n);
    const Permutation q = testing::random_permutation(rng, n);
    const bool c = compatible(to_labelled_graph(hcycle_from_perm(p)), to_labelled_graph(hcycle_from_perm(q)));
    ASSERT_EQ(c, is_k_separated(p, q, static_cast<int>(n)));
  }
}

}  // namespace
}  // namespace permsep
