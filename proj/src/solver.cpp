#include "permsep/solver.hpp"

#include "permsep/bounds.hpp"
#include "permsep/kernels.hpp"
#include "permsep/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace permsep {

CompatibilityGraph::CompatibilityGraph(int n, int k, std::vector<Permutation> candidates,
                                       std::vector<std::uint64_t> rows)
    : n_(n), k_(k), candidates_(std::move(candidates)), words_((candidates_.size() + 63) / 64),
      rows_(std::move(rows)) {
  if (rows_.size() != candidates_.size() * words_) {
    throw std::invalid_argument("adjacency size does not match the candidate count");
  }
}

std::size_t CompatibilityGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (const std::uint64_t w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Permutation> path_representatives(int n) {
  if (n < 2) throw std::invalid_argument("path_representatives needs n >= 2");
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), Vertex{1});
  std::vector<Permutation> out;
  do {
    if (seq.front() < seq.back()) out.push_back(Permutation::trusted(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

CompatibilityGraph build_graph(int n, int k, int jobs) {
  if (n < 3 || n > 8) throw std::out_of_range("build_graph needs 3 <= n <= 8");
  if (k < 2 || k > n) throw std::out_of_range("build_graph needs 2 <= k <= n");
  std::vector<Permutation> candidates = path_representatives(n);
  const kernels::FamilyIndex index(candidates);
  const std::size_t m = candidates.size();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> rows(m * words);
  const auto d = static_cast<std::uint32_t>(k - 1);
  auto adjacent = [&](std::size_t i, std::size_t j) { return index.separated(i, j, d); };
  if (jobs == 1) {
    kernels::serial::fill_adjacency(m, words, rows.data(), adjacent);
  } else {
    kernels::omp::fill_adjacency(m, words, rows.data(), adjacent, jobs);
  }
  return CompatibilityGraph(n, k, std::move(candidates), std::move(rows));
}

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

// Vertices ordered so that the densest core comes first: reverse of the
// min-degree removal sequence.
std::vector<std::size_t> degeneracy_order(const CompatibilityGraph& g) {
  const std::size_t m = g.size();
  std::vector<std::size_t> degree(m);
  for (std::size_t i = 0; i < m; ++i) degree[i] = g.degree(i);
  std::vector<bool> removed(m, false);
  std::vector<std::size_t> removal;
  removal.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!removed[i] && (best == m || degree[i] < degree[best])) best = i;
    }
    removed[best] = true;
    removal.push_back(best);
    for (std::size_t j = 0; j < m; ++j) {
      if (!removed[j] && g.adjacent(best, j)) --degree[j];
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

class Search {
 public:
  Search(const CompatibilityGraph& g, const CliqueOptions& options)
      : m_(g.size()), words_((m_ + 63) / 64), order_(degeneracy_order(g)),
        position_(m_), rows_(m_ * words_, 0), options_(options), start_(Clock::now()) {
    for (std::size_t a = 0; a < m_; ++a) position_[order_[a]] = a;
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) {
        if (a != b && g.adjacent(order_[a], order_[b])) set(rows_.data() + a * words_, b);
      }
    }
  }

  CliqueResult run() {
    CliqueResult result;
    Bits all(words_, 0);
    std::vector<std::size_t> seed;
    if (options_.vertex_transitive) {
      seed.push_back(position_[0]);
      const std::uint64_t* n0 = rows_.data() + seed.front() * words_;
      std::copy(n0, n0 + words_, all.begin());
      offer(seed);
    } else {
      for (std::size_t v = 0; v < m_; ++v) set(all.data(), v);
    }
    if (options_.parallel) {
      run_parallel(all, seed);
    } else if (any(all)) {
      Worker w{*this};
      std::vector<std::size_t> clique = seed;
      w.expand(clique, all);
      nodes_ += w.nodes;
    }
    result.size = best_.size();
    for (const std::size_t v : best_) result.witness.push_back(order_[v]);
    std::sort(result.witness.begin(), result.witness.end());
    result.proven_optimal = !aborted_.load();
    result.nodes = nodes_;
    result.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result;
  }

 private:
  static void set(std::uint64_t* bits, std::size_t v) { bits[v / 64] |= 1ULL << (v % 64); }
  static void reset(std::uint64_t* bits, std::size_t v) { bits[v / 64] &= ~(1ULL << (v % 64)); }
  static bool test(const std::uint64_t* bits, std::size_t v) {
    return ((bits[v / 64] >> (v % 64)) & 1ULL) != 0;
  }
  static bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
  }

  struct Worker {
    Search& s;
    std::uint64_t nodes = 0;

    bool out_of_time() {
      if (s.aborted_.load(std::memory_order_relaxed)) return true;
      if ((++nodes & 1023U) != 0) return false;
      const double elapsed = std::chrono::duration<double>(Clock::now() - s.start_).count();
      if (elapsed > s.options_.time_limit_seconds) s.aborted_ = true;
      return s.aborted_.load();
    }

    // Greedy sequential coloring of P: vertices in `order`, color bounds in `bound`.
    void color(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) {
      Bits u = p;
      Bits q(s.words_);
      std::size_t c = 0;
      while (any(u)) {
        ++c;
        q = u;
        for (std::size_t w = 0; w < s.words_; ++w) {
          while (q[w] != 0) {
            const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
            reset(u.data(), v);
            reset(q.data(), v);
            const std::uint64_t* nv = s.rows_.data() + v * s.words_;
            for (std::size_t x = w; x < s.words_; ++x) q[x] &= ~nv[x];
            order.push_back(v);
            bound.push_back(c);
          }
        }
      }
    }

    void expand(std::vector<std::size_t>& clique, Bits p) {
      if (out_of_time()) return;
      std::vector<std::size_t> order;
      std::vector<std::size_t> bound;
      color(p, order, bound);
      Bits next(s.words_);
      for (std::size_t t = order.size(); t-- > 0;) {
        if (clique.size() + bound[t] <= s.best_size_.load(std::memory_order_relaxed)) return;
        const std::size_t v = order[t];
        clique.push_back(v);
        const std::uint64_t* nv = s.rows_.data() + v * s.words_;
        for (std::size_t w = 0; w < s.words_; ++w) next[w] = p[w] & nv[w];
        if (any(next)) {
          expand(clique, next);
        } else {
          s.offer(clique);
        }
        clique.pop_back();
        reset(p.data(), v);
        if (s.aborted_.load(std::memory_order_relaxed)) return;
      }
    }
  };

  void offer(const std::vector<std::size_t>& clique) {
    if (clique.size() <= best_size_.load()) return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (clique.size() > best_.size()) {
      best_ = clique;
      best_size_ = clique.size();
    }
  }

  // Top-level branch v explores cliques whose earliest vertex in the order is v.
  void run_parallel(const Bits& all, const std::vector<std::size_t>& seed) {
    const auto total = static_cast<std::int64_t>(m_);
    std::uint64_t nodes = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::omp::resolve_jobs(options_.jobs)) reduction(+ : nodes)
    for (std::int64_t sv = 0; sv < total; ++sv) {
      const auto v = static_cast<std::size_t>(sv);
      if (!test(all.data(), v)) continue;
      Worker w{*this};
      Bits p(words_, 0);
      const std::uint64_t* nv = rows_.data() + v * words_;
      for (std::size_t x = 0; x < words_; ++x) p[x] = all[x] & nv[x];
      for (std::size_t u = 0; u <= v; ++u) reset(p.data(), u);
      std::vector<std::size_t> clique = seed;
      clique.push_back(v);
      if (any(p)) {
        w.expand(clique, p);
      } else {
        offer(clique);
      }
      nodes += w.nodes;
    }
    nodes_ += nodes;
  }

  std::size_t m_;
  std::size_t words_;
  std::vector<std::size_t> order_;     // search position -> vertex
  std::vector<std::size_t> position_;  // vertex -> search position
  Bits rows_;
  CliqueOptions options_;
  Clock::time_point start_;
  std::atomic<bool> aborted_{false};
  std::atomic<std::size_t> best_size_{0};
  std::vector<std::size_t> best_;
  std::mutex mutex_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CliqueResult max_clique(const CompatibilityGraph& graph, const CliqueOptions& options) {
  if (graph.size() == 0) return CliqueResult{};
  Search search(graph, options);
  return search.run();
}

KRule parse_k_rule(const std::string& text) {
  if (text == "2") return KRule::Two;
  if (text == "3") return KRule::Three;
  if (text == "n") return KRule::N;
  if (text == "all") return KRule::All;
  throw std::invalid_argument("k rule must be one of 2, 3, n, all");
}

std::vector<TableRow> p_table(int n_max, KRule rule, const CliqueOptions& options) {
  if (n_max < 3 || n_max > 8) throw std::out_of_range("p_table needs 3 <= n_max <= 8");
  std::vector<TableRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    std::vector<int> ks;
    switch (rule) {
      case KRule::Two: ks = {2}; break;
      case KRule::Three: ks = {3}; break;
      case KRule::N: ks = {n}; break;
      case KRule::All:
        for (int k = 2; k <= n; ++k) ks.push_back(k);
        break;
    }
    for (const int k : ks) {
      const CompatibilityGraph g = build_graph(n, k, options.jobs);
      const CliqueResult c = max_clique(g, options);
      TableRow row;
      row.n = n;
      row.k = k;
      row.value = c.size;
      row.proven_optimal = c.proven_optimal;
      for (const std::size_t i : c.witness) row.witness.push_back(g.candidates()[i]);
      if (!row.witness.empty() && !verify_family(row.witness, k, VerifyMode::exhaustive(), options.jobs).ok) {
        throw std::logic_error("solver witness failed verification");
      }
      if (exact_formula_covers(n, k)) {
        const ExactValue e = exact_formulas(n, k);
        row.formula = e.formula;
        const BigInt v = c.size;
        const bool agrees = c.proven_optimal ? (e.lo <= v && v <= e.hi) : v <= e.hi;
        if (!agrees) {
          throw std::logic_error("solver value " + std::to_string(c.size) + " for P(" +
                                 std::to_string(n) + "," + std::to_string(k) +
                                 ") disagrees with " + e.formula);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace permsep
