#include "permsep/bounds.hpp"
#include "permsep/solver.hpp"
#include "permsep/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <bit>

namespace permsep {
namespace {

using testing::Rng;

std::size_t solve(int n, int k, bool transitive = true, int jobs = 0) {
  CliqueOptions o;
  o.vertex_transitive = transitive;
  o.jobs = jobs;
  const CliqueResult r = max_clique(build_graph(n, k, jobs), o);
  EXPECT_TRUE(r.proven_optimal);
  return r.size;
}

// Exhaustive maximum clique over all subsets; fine up to about 18 vertices.
std::size_t brute_clique(const CompatibilityGraph& g) {
  const std::size_t m = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < m && ok; ++j) {
        if ((mask >> j) & 1U) ok = g.adjacent(i, j);
      }
    }
    if (ok) best = size;
  }
  return best;
}

CompatibilityGraph random_graph(Rng& rng, std::size_t m, double density) {
  std::vector<Permutation> cands;
  for (std::size_t i = 0; i < m; ++i) cands.push_back(Permutation{static_cast<Vertex>(i + 1)});
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> rows(m * words, 0);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!coin(rng)) continue;
      rows[i * words + j / 64] |= 1ULL << (j % 64);
      rows[j * words + i / 64] |= 1ULL << (i % 64);
    }
  }
  return CompatibilityGraph(4, 3, std::move(cands), std::move(rows));
}

TEST(CandidatesTest, CountsAndOrder) {
  for (int n = 3; n <= 7; ++n) {
    const auto c = path_representatives(n);
    EXPECT_EQ(BigInt(c.size()), factorial(static_cast<unsigned>(n)) / 2) << n;
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_LT(c[i].front(), c[i].back());
      if (i > 0) {
        EXPECT_LT(c[i - 1], c[i]);
      }
    }
  }
}

TEST(CompatibilityGraphTest, MatchesOracleAndKernels) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 5}, {6, 4}}) {
    const CompatibilityGraph g = build_graph(n, k);
    const CompatibilityGraph serial = build_graph(n, k, 1);
    ASSERT_EQ(g.size(), serial.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_FALSE(g.adjacent(i, i));
      for (std::size_t j = 0; j < g.size(); ++j) {
        ASSERT_EQ(g.adjacent(i, j), serial.adjacent(i, j));
        ASSERT_EQ(g.adjacent(i, j), g.adjacent(j, i));
        if (n <= 5 && i != j) {
          ASSERT_EQ(g.adjacent(i, j), testing::oracle_separated(g.candidates()[i], g.candidates()[j], k));
        }
      }
    }
    // Vertex-transitive: all degrees agree.
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_EQ(g.degree(i), g.degree(0));
  }
  EXPECT_THROW(build_graph(2, 2), std::out_of_range);
  EXPECT_THROW(build_graph(5, 6), std::out_of_range);
}

TEST(MaxCliqueTest, KnownValues) {
  EXPECT_EQ(solve(4, 2), 6U);
  EXPECT_EQ(solve(4, 3), 3U);
  EXPECT_EQ(solve(4, 4), 6U);
  EXPECT_EQ(solve(5, 2), 24U);
  EXPECT_EQ(solve(5, 3), 10U);
  EXPECT_EQ(solve(5, 4), 12U);
  EXPECT_EQ(solve(5, 5), 6U);
  EXPECT_EQ(solve(6, 3), 10U);
  EXPECT_EQ(solve(6, 6), 9U);
}

TEST(MaxCliqueTest, ThreeTwoIsThree) {
  // The closed form (n-1)! would give 2 here; the three paths of K_3 pairwise share an edge.
  const CompatibilityGraph g = build_graph(3, 2);
  EXPECT_EQ(g.size(), 3U);
  EXPECT_EQ(brute_clique(g), 3U);
  EXPECT_EQ(solve(3, 2), 3U);
  EXPECT_EQ(solve(3, 2, false), 3U);
  EXPECT_FALSE(exact_formula_covers(3, 2));
}

TEST(MaxCliqueTest, AgreesWithClosedForms) {
  const std::vector<std::pair<int, int>> cells{{4, 2}, {5, 2}, {3, 3}, {4, 3}, {5, 3}, {6, 3},
                                               {4, 4}, {6, 6}, {5, 5}};
  for (const auto& [n, k] : cells) {
    const ExactValue e = exact_formulas(n, k);
    const BigInt got(solve(n, k));
    EXPECT_LE(e.lo, got) << n << "," << k;
    EXPECT_LE(got, e.hi) << n << "," << k;
  }
  EXPECT_TRUE(exact_formulas(6, 6).exact());
  EXPECT_EQ(BigInt(solve(5, 5)), exact_formulas(5, 5).lo);
}

TEST(MaxCliqueTest, WitnessesAreSeparatedFamilies) {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      if (n == 6 && (k == 4 || k == 5 || k == 2)) continue;  // slower cases live in acceptance
      const CompatibilityGraph g = build_graph(n, k);
      CliqueOptions o;
      o.vertex_transitive = true;
      const CliqueResult r = max_clique(g, o);
      ASSERT_EQ(r.witness.size(), r.size);
      std::vector<Permutation> family;
      for (const std::size_t i : r.witness) family.push_back(g.candidates()[i]);
      EXPECT_TRUE(verify_family(family, k).ok) << n << "," << k;
      EXPECT_TRUE(testing::oracle_family_ok(family, k)) << n << "," << k;
      EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
    }
  }
}

TEST(MaxCliqueTest, DeterministicAndSymmetryExact) {
  for (int k = 2; k <= 5; ++k) {
    const CompatibilityGraph g = build_graph(5, k);
    const CliqueResult a = max_clique(g);
    CliqueOptions serial;
    serial.jobs = 1;
    const CliqueResult b = max_clique(g, serial);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes, b.nodes);
    CliqueOptions par;
    par.parallel = true;
    EXPECT_EQ(max_clique(g, par).size, a.size);
    CliqueOptions vt;
    vt.vertex_transitive = true;
    const CliqueResult c = max_clique(g, vt);
    EXPECT_EQ(c.size, a.size);
    ASSERT_FALSE(c.witness.empty());
    EXPECT_EQ(c.witness.front(), 0U);
  }
}

TEST(MaxCliqueProperty, AgreesWithBruteForce) {
  Rng rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 16);
    const double density = 0.2 + 0.6 * static_cast<double>(trial % 5) / 4.0;
    const CompatibilityGraph g = random_graph(rng, m, density);
    const std::size_t expected = brute_clique(g);
    const CliqueResult r = max_clique(g);
    EXPECT_EQ(r.size, expected) << trial;
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
        EXPECT_TRUE(g.adjacent(r.witness[i], r.witness[j]));
      }
    }
    CliqueOptions par;
    par.parallel = true;
    EXPECT_EQ(max_clique(g, par).size, expected) << trial;
  }
}

TEST(MaxCliqueTest, TimeLimitReportsUnproven) {
  CliqueOptions o;
  o.time_limit_seconds = 0.0;
  const CliqueResult r = max_clique(build_graph(6, 4), o);
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_LE(r.size, 13U);
}

TEST(TableTest, RulesAndFormulaChecks) {
  EXPECT_EQ(parse_k_rule("2"), KRule::Two);
  EXPECT_EQ(parse_k_rule("n"), KRule::N);
  EXPECT_EQ(parse_k_rule("all"), KRule::All);
  EXPECT_THROW(parse_k_rule("7"), std::invalid_argument);
  CliqueOptions o;
  o.vertex_transitive = true;
  const auto rows = p_table(5, KRule::All, o);
  ASSERT_EQ(rows.size(), 2U + 3U + 4U);
  for (const TableRow& row : rows) {
    EXPECT_TRUE(row.proven_optimal);
    EXPECT_EQ(row.witness.size(), row.value);
    EXPECT_TRUE(verify_family(row.witness, row.k).ok);
    EXPECT_EQ(row.formula.has_value(), exact_formula_covers(row.n, row.k)) << row.n << "," << row.k;
  }
  const auto diag = p_table(6, KRule::N, o);
  ASSERT_EQ(diag.size(), 4U);
  EXPECT_EQ(diag.back().value, 9U);
}

}  // namespace
}  // namespace permsep
