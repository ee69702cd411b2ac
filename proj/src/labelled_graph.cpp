#include "permsep/labelled_graph.hpp"

#include "permsep/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permsep {

Grid::Grid(std::size_t w, std::size_t h, std::vector<Vertex> cells)
    : w_(w), h_(h), cells_(std::move(cells)) {
  if (w_ == 0 || h_ == 0) throw std::invalid_argument("grid dimensions must be positive");
  if (cells_.size() != w_ * h_) throw std::invalid_argument("grid cell count must equal w*h");
  std::vector<Vertex> sorted = cells_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("grid repeats a vertex");
  }
  min_ = sorted.front();
}

LabelledGraph::LabelledGraph(std::vector<Grid> grids, std::optional<Vertex> isolated,
                             std::map<Edge, Label> extra_edges)
    : grids_(std::move(grids)), isolated_(isolated), extra_(std::move(extra_edges)) {
  validate();
}

LabelledGraph LabelledGraph::trusted(std::vector<Grid> grids, std::optional<Vertex> isolated,
                                     std::map<Edge, Label> extra_edges) {
  LabelledGraph g;
  g.grids_ = std::move(grids);
  g.isolated_ = isolated;
  g.extra_ = std::move(extra_edges);
  return g;
}

namespace {

void append_grid_edges(const Grid& g, std::vector<LabelledEdge>& out) {
  for (std::size_t r = 0; r < g.height(); ++r) {
    for (std::size_t c = 0; c < g.width(); ++c) {
      if (c + 1 < g.width()) out.push_back({Edge::of(g.at(r, c), g.at(r, c + 1)), Label::A});
      if (r + 1 < g.height()) out.push_back({Edge::of(g.at(r, c), g.at(r + 1, c)), Label::B});
    }
  }
}

}  // namespace

void LabelledGraph::validate() const {
  std::vector<Vertex> owned;
  for (const Grid& g : grids_) owned.insert(owned.end(), g.cells().begin(), g.cells().end());
  if (isolated_) owned.push_back(*isolated_);
  std::sort(owned.begin(), owned.end());
  if (std::adjacent_find(owned.begin(), owned.end()) != owned.end()) {
    throw std::invalid_argument("grids and isolated vertex must be vertex-disjoint");
  }
  std::vector<LabelledEdge> implied;
  for (const Grid& g : grids_) append_grid_edges(g, implied);
  std::sort(implied.begin(), implied.end());
  for (const auto& [edge, label] : extra_) {
    auto it = std::lower_bound(implied.begin(), implied.end(), LabelledEdge{edge, Label::A});
    if (it != implied.end() && it->edge == edge && it->label != label) {
      throw std::invalid_argument("extra edge {" + std::to_string(edge.lo) + "," +
                                  std::to_string(edge.hi) + "} contradicts its grid label");
    }
  }
}

std::vector<LabelledEdge> LabelledGraph::edge_labels() const {
  std::vector<LabelledEdge> out;
  for (const Grid& g : grids_) append_grid_edges(g, out);
  for (const auto& [edge, label] : extra_) out.push_back({edge, label});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> LabelledGraph::vertices() const {
  std::vector<Vertex> v;
  for (const Grid& g : grids_) v.insert(v.end(), g.cells().begin(), g.cells().end());
  if (isolated_) v.push_back(*isolated_);
  for (const auto& entry : extra_) {
    v.push_back(entry.first.lo);
    v.push_back(entry.first.hi);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t LabelledGraph::vertex_count() const {
  if (extra_.empty()) {
    std::size_t total = isolated_ ? 1 : 0;
    for (const Grid& g : grids_) total += g.cells().size();
    return total;
  }
  return vertices().size();
}

Census LabelledGraph::census() const {
  Census c;
  for (const Grid& g : grids_) ++c[g.shape()];
  return c;
}

std::optional<std::size_t> LabelledGraph::uniform_width() const {
  if (grids_.empty()) return std::nullopt;
  const std::size_t w = grids_.front().width();
  for (const Grid& g : grids_) {
    if (g.width() != w) return std::nullopt;
  }
  return w;
}

bool compatible_edges(std::span<const LabelledEdge> e1, std::span<const LabelledEdge> e2) {
  auto a = e1.begin();
  auto b = e2.begin();
  while (a != e1.end() && b != e2.end()) {
    if (a->edge < b->edge) {
      ++a;
    } else if (b->edge < a->edge) {
      ++b;
    } else {
      if (a->label != b->label) return true;
      ++a;
      ++b;
    }
  }
  return false;
}

bool compatible(const LabelledGraph& w1, const LabelledGraph& w2) {
  return compatible_edges(w1.edge_labels(), w2.edge_labels());
}

FamilyReport pairwise_compatible(std::span<const LabelledGraph> family, int jobs) {
  if (family.empty()) throw std::invalid_argument("family is empty");
  std::vector<std::vector<LabelledEdge>> edges;
  edges.reserve(family.size());
  for (const LabelledGraph& g : family) edges.push_back(g.edge_labels());
  auto ok = [&](std::size_t i, std::size_t j) { return compatible_edges(edges[i], edges[j]); };
  const kernels::PairScan scan = jobs == 1
                                     ? kernels::serial::scan_all_pairs(family.size(), ok)
                                     : kernels::omp::scan_all_pairs(family.size(), ok, jobs);
  FamilyReport r;
  r.family_size = family.size();
  r.pairs_checked = scan.checked;
  r.ok = !scan.first_failure.has_value();
  r.witness = scan.first_failure;
  return r;
}

namespace {

void check_z_swappable(const LabelledGraph& w) {
  if (!w.isolated()) throw std::invalid_argument("z-swap needs an isolated start vertex");
  if (!w.grids().empty() && !w.uniform_width()) {
    throw std::invalid_argument("z-swap needs all grids to have the same width");
  }
}

std::vector<Vertex> z_swap_sequence(const LabelledGraph& w, auto&& bit) {
  std::vector<Vertex> seq;
  seq.reserve(w.vertex_count());
  seq.push_back(*w.isolated());
  const auto grids = w.grids();
  for (std::size_t i = 0; i < grids.size(); ++i) {
    const Grid& g = grids[i];
    const bool right_to_left = bit(i);
    for (std::size_t r = 0; r < g.height(); ++r) {
      const auto row = g.row(r);
      if (right_to_left) {
        seq.insert(seq.end(), row.rbegin(), row.rend());
      } else {
        seq.insert(seq.end(), row.begin(), row.end());
      }
    }
  }
  return seq;
}

}  // namespace

Permutation z_swap(const LabelledGraph& w, std::span<const std::uint8_t> bits) {
  check_z_swappable(w);
  if (bits.size() != w.grids().size()) {
    throw std::invalid_argument("z-swap needs one bit per grid");
  }
  return Permutation::trusted(z_swap_sequence(w, [&](std::size_t i) { return bits[i] != 0; }));
}

std::vector<Permutation> z_swap_all(const LabelledGraph& w, int jobs, std::size_t max_grids) {
  check_z_swappable(w);
  const std::size_t g = w.grids().size();
  if (g > max_grids) {
    throw CapExceeded("z-swap of " + std::to_string(g) + " grids exceeds the enumeration cap");
  }
  if (g > 0 && *w.uniform_width() < 2) {
    throw std::invalid_argument("z-swap of width-1 grids yields duplicate paths");
  }
  const std::uint64_t total = 1ULL << g;
  std::vector<std::vector<Vertex>> seqs(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static) num_threads(kernels::omp::resolve_jobs(jobs))
  for (std::int64_t sx = 0; sx < count; ++sx) {
    const auto x = static_cast<std::uint64_t>(sx);
    seqs[static_cast<std::size_t>(x)] =
        z_swap_sequence(w, [&](std::size_t i) { return ((x >> (g - 1 - i)) & 1ULL) != 0; });
  }
  std::vector<Permutation> out;
  out.reserve(total);
  for (auto& s : seqs) out.push_back(Permutation::trusted(std::move(s)));
  return out;
}

LabelledHCycle hcycle_from_perm(const Permutation& p) {
  if (p.size() < 3) throw std::invalid_argument("labelled H-cycles need n >= 3");
  return LabelledHCycle{std::vector<Vertex>(p.seq().begin(), p.seq().end()),
                        Edge::of(p.front(), p.back())};
}

Permutation perm_from_hcycle(const LabelledHCycle& c) {
  const std::size_t n = c.cycle.size();
  if (n < 3) throw std::invalid_argument("labelled H-cycles need n >= 3");
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = c.cycle[i];
    const Vertex b = c.cycle[(i + 1) % n];
    if (Edge::of(a, b) == c.b_edge) {
      std::vector<Vertex> seq;
      seq.reserve(n);
      for (std::size_t t = 1; t <= n; ++t) seq.push_back(c.cycle[(i + t) % n]);
      return Permutation(std::move(seq));
    }
  }
  throw std::invalid_argument("B edge is not an edge of the cycle");
}

LabelledGraph to_labelled_graph(const LabelledHCycle& c) {
  const std::size_t n = c.cycle.size();
  std::map<Edge, Label> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge e = Edge::of(c.cycle[i], c.cycle[(i + 1) % n]);
    edges[e] = e == c.b_edge ? Label::B : Label::A;
  }
  return LabelledGraph({}, std::nullopt, std::move(edges));
}

}  // namespace permsep
