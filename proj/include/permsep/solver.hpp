#pragma once

#include "permsep/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permsep {

/// Candidates are the n!/2 Hamiltonian paths of K_n, each as its
/// representative with first < last, in lexicographic order. Bit j of row i
/// is set iff candidates i and j are k-neighbor separated.
class CompatibilityGraph {
 public:
  CompatibilityGraph(int n, int k, std::vector<Permutation> candidates,
                     std::vector<std::uint64_t> rows);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return candidates_.size(); }
  std::size_t words() const noexcept { return words_; }
  std::span<const Permutation> candidates() const noexcept { return candidates_; }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return std::span<const std::uint64_t>(rows_).subspan(i * words_, words_);
  }
  bool adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1ULL;
  }
  std::size_t degree(std::size_t i) const;

 private:
  int n_;
  int k_;
  std::vector<Permutation> candidates_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Path representatives of K_n in lexicographic order.
std::vector<Permutation> path_representatives(int n);

/// 3 <= n <= 8, 2 <= k <= n. jobs == 1 uses the serial reference kernel.
CompatibilityGraph build_graph(int n, int k, int jobs = 0);

struct CliqueOptions {
  double time_limit_seconds = 60.0;
  /// Explore top-level branches on several threads. The size is still exact;
  /// the witness may differ from the single-threaded one.
  bool parallel = false;
  int jobs = 0;
  /// Only search cliques containing vertex 0. Exact for vertex-transitive
  /// graphs, which every build_graph result is (S_n permutes the paths).
  bool vertex_transitive = false;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending candidate indices
  bool proven_optimal = true;
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;
};

/// Branch and bound with greedy coloring bounds over bitset rows
/// (degeneracy vertex order).
CliqueResult max_clique(const CompatibilityGraph& graph, const CliqueOptions& options = {});

struct TableRow {
  int n = 0;
  int k = 0;
  std::size_t value = 0;
  bool proven_optimal = true;
  std::optional<std::string> formula;
  std::vector<Permutation> witness;
};

enum class KRule { Two, Three, N, All };

KRule parse_k_rule(const std::string& text);

/// P(n, k) for 3 <= n <= n_max under the rule, cross-checked against
/// exact_formulas wherever they apply. A disagreement throws std::logic_error.
std::vector<TableRow> p_table(int n_max, KRule rule, const CliqueOptions& options = {});

}  // namespace permsep
