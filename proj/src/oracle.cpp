#include "ballcarve/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "ballcarve/chromatic.hpp"

namespace ballcarve {

namespace {

void require_mask_order(std::size_t n) {
  if (n > kMaxMaskOrder)
    throw std::invalid_argument("edge masks support at most " +
                                std::to_string(kMaxMaskOrder) + " vertices");
}

using Rows = std::vector<std::uint32_t>; // adjacency bit rows

Rows rows_of(const Graph &g) {
  Rows rows(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    rows[u] |= 1u << v;
    rows[v] |= 1u << u;
  }
  return rows;
}

// Mask of the graph relabeled so that new vertex p is old vertex label[p].
std::uint64_t relabeled_mask(const Rows &rows, const std::vector<Vertex> &label) {
  std::uint64_t mask = 0;
  for (Vertex j = 1; j < label.size(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rows[label[i]] >> label[j] & 1u)
        mask |= std::uint64_t{1} << pair_bit(i, j);
  return mask;
}

// Stable color refinement; returns class index per vertex, classes numbered
// by the sorted order of their signatures.
std::vector<std::size_t> refine(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v)
    color[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex u : g.neighbors(v))
        sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    if (sorted.size() == classes)
      return color;
    classes = sorted.size();
  }
}

void min_over_cells(const Rows &rows, std::vector<Vertex> &label,
                    const std::vector<std::pair<std::size_t, std::size_t>> &cells,
                    std::size_t cell, std::uint64_t &best) {
  if (cell == cells.size()) {
    best = std::min(best, relabeled_mask(rows, label));
    return;
  }
  auto first = label.begin() + cells[cell].first;
  auto last = label.begin() + cells[cell].second;
  std::sort(first, last);
  do {
    min_over_cells(rows, label, cells, cell + 1, best);
  } while (std::next_permutation(first, last));
}

} // namespace

std::uint64_t edge_mask(const Graph &g) {
  require_mask_order(g.order());
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges())
    mask |= std::uint64_t{1} << pair_bit(u, v);
  return mask;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  require_mask_order(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (mask >> pair_bit(i, j) & 1u)
        edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::uint64_t min_relabel_mask(const Graph &g) {
  require_mask_order(g.order());
  Rows rows = rows_of(g);
  std::vector<Vertex> label(g.order());
  std::iota(label.begin(), label.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, relabeled_mask(rows, label));
  } while (std::next_permutation(label.begin(), label.end()));
  return best;
}

std::uint64_t canonical_mask(const Graph &g) {
  require_mask_order(g.order());
  const std::size_t n = g.order();
  if (n == 0)
    return 0;
  std::vector<std::size_t> color = refine(g);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::stable_sort(label.begin(), label.end(),
                   [&](Vertex a, Vertex b) { return color[a] < color[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[label[j]] == color[label[i]])
      ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  min_over_cells(rows_of(g), label, cells, 0, best);
  return best;
}

bool are_isomorphic(const Graph &a, const Graph &b) {
  return a.order() == b.order() && a.num_edges() == b.num_edges() &&
         canonical_mask(a) == canonical_mask(b);
}

std::vector<std::uint64_t> isomorphism_classes(std::size_t v) {
  if (v < 1 || v > kMaxEnumerationOrder)
    throw std::invalid_argument("isomorphism_classes supports 1 <= v <= " +
                                std::to_string(kMaxEnumerationOrder));
  std::vector<std::uint64_t> reps{0};
  for (std::size_t order = 2; order <= v; ++order) {
    const std::size_t shift = (order - 1) * (order - 2) / 2;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t base : reps)
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (order - 1));
           ++nbrs)
        seen.insert(canonical_mask(graph_from_mask(order, base | nbrs << shift)));
    reps.assign(seen.begin(), seen.end());
    std::sort(reps.begin(), reps.end());
  }
  return reps;
}

namespace {

bool prune_at(std::size_t v, Pruning pruning) {
  switch (pruning) {
  case Pruning::On:
    return true;
  case Pruning::Off:
    if (v > kMaxUnprunedOrder)
      throw std::invalid_argument("labeled enumeration is capped at " +
                                  std::to_string(kMaxUnprunedOrder) +
                                  " vertices; enable pruning");
    return false;
  case Pruning::Auto:
    break;
  }
  return v > kMaxUnprunedOrder;
}

} // namespace

void enumerate_graphs(
    std::size_t v, Pruning pruning,
    const std::function<bool(const Graph &, std::uint64_t)> &visit) {
  if (v < 1 || v > kMaxEnumerationOrder)
    throw std::invalid_argument("enumerate_graphs supports 1 <= v <= " +
                                std::to_string(kMaxEnumerationOrder));
  if (prune_at(v, pruning)) {
    for (std::uint64_t mask : isomorphism_classes(v))
      if (!visit(graph_from_mask(v, mask), mask))
        return;
    return;
  }
  const std::uint64_t total = std::uint64_t{1} << (v * (v - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (!visit(graph_from_mask(v, mask), mask))
      return;
}

std::size_t count_graphs(std::size_t v, Pruning pruning) {
  std::size_t count = 0;
  enumerate_graphs(v, pruning, [&](const Graph &, std::uint64_t) {
    ++count;
    return true;
  });
  return count;
}

OracleResult f_oracle(std::uint64_t n, std::size_t r, std::size_t c,
                      std::size_t vmax, Pruning pruning) {
  if (n < 1 || r < 1 || c < 1)
    throw std::invalid_argument("f_oracle requires n, r, c >= 1");
  if (vmax < 1 || vmax > kMaxEnumerationOrder)
    throw std::invalid_argument("f_oracle supports 1 <= vmax <= " +
                                std::to_string(kMaxEnumerationOrder));
  if (pruning == Pruning::Off && vmax > kMaxUnprunedOrder)
    throw std::invalid_argument("labeled enumeration is capped at " +
                                std::to_string(kMaxUnprunedOrder) +
                                " vertices; enable pruning");

  OracleResult result;
  for (std::size_t v = 1; v <= vmax; ++v) {
    // chi(G) <= |V|, so no graph this small can need more than n colors.
    if (v <= n)
      continue;
    const bool pruned = prune_at(v, pruning);
    std::optional<std::uint64_t> witness;
    enumerate_graphs(v, pruning, [&](const Graph &g, std::uint64_t mask) {
      ++result.graphs_examined;
      if (k_coloring(g, n) || !local_chromatic_at_most(g, r, c))
        return true;
      ++result.witnesses_found;
      // Labeled masks arrive in ascending order, so the first hit is already
      // minimal; class representatives have to be minimized and compared.
      if (!pruned) {
        if (!witness)
          witness = mask;
        return true;
      }
      std::uint64_t least = min_relabel_mask(g);
      if (!witness || least < *witness)
        witness = least;
      return true;
    });
    if (witness) {
      result.mode = OracleResult::Mode::Exact;
      result.value = v - 1;
      result.witness = graph_from_mask(v, *witness);
      return result;
    }
  }
  result.mode = OracleResult::Mode::LowerBound;
  result.value = vmax;
  return result;
}

} // namespace ballcarve
