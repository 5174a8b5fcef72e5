#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ballcarve/graph.hpp"

namespace ballcarve {

/// Small graphs packed into a 64-bit edge mask. The pair (i, j), i < j, owns
/// bit j(j-1)/2 + i, so the mask of G - {n-1} is a prefix of the mask of G.
/// Masks are defined for graphs of at most kMaxMaskOrder vertices.
inline constexpr std::size_t kMaxMaskOrder = 11;

constexpr std::size_t pair_bit(Vertex i, Vertex j) {
  return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

std::uint64_t edge_mask(const Graph &g);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Minimum edge mask over all n! relabelings. Exact but factorial.
std::uint64_t min_relabel_mask(const Graph &g);

/// Canonical form used for isomorphism pruning: vertices are split by color
/// refinement (degree, then multisets of neighbor classes, to a fixpoint),
/// classes are laid out in refinement order and the result is the minimum
/// mask over permutations inside each class. Isomorphic graphs, and only
/// those, get equal values.
std::uint64_t canonical_mask(const Graph &g);

bool are_isomorphic(const Graph &a, const Graph &b);

enum class Pruning { Off, On, Auto };

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxUnprunedOrder = 6;

/// One representative (its canonical mask) per isomorphism class of graphs
/// on v vertices, ascending. Built by extending each class on v-1 vertices
/// with every neighborhood of a new vertex.
std::vector<std::uint64_t> isomorphism_classes(std::size_t v);

/// Streams graphs on v vertices, 1 <= v <= 8. Without pruning this is every
/// one of the 2^C(v,2) labeled graphs in ascending mask order; with pruning
/// it is one canonical graph per isomorphism class. The visitor returns
/// false to stop early. Pruning::Auto prunes above 6 vertices, and
/// Pruning::Off is rejected there.
void enumerate_graphs(
    std::size_t v, Pruning pruning,
    const std::function<bool(const Graph &, std::uint64_t mask)> &visit);

std::size_t count_graphs(std::size_t v, Pruning pruning);

struct OracleResult {
  enum class Mode { Exact, LowerBound };
  Mode mode = Mode::LowerBound;
  std::uint64_t value = 0;
  /// Exact mode: the minimum-mask graph on value+1 vertices with
  /// lchi_r <= c and chi > n.
  std::optional<Graph> witness;
  std::uint64_t graphs_examined = 0;
  /// Graphs (or classes, when pruned) at the deciding order that qualify.
  std::uint64_t witnesses_found = 0;
};

/// Exhaustive evaluation of f_c(n, r) over graphs with at most vmax <= 8
/// vertices. The first order v carrying a graph with lchi_r <= c and
/// chi > n gives Exact f = v - 1; that order is still scanned in full. If no
/// order qualifies the result is LowerBound vmax. Pruning changes neither
/// the value nor the witness.
OracleResult f_oracle(std::uint64_t n, std::size_t r, std::size_t c,
                      std::size_t vmax, Pruning pruning = Pruning::Auto);

} // namespace ballcarve
