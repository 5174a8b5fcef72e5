#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ballcarve/graph.hpp"

namespace ballcarve {

using Color = std::uint32_t;

/// Total vertex coloring; `palette` is 1 + the largest color used (0 when
/// there are no vertices).
struct Coloring {
  std::vector<Color> colors;
  std::size_t palette = 0;

  static Coloring from_colors(std::vector<Color> colors);
  std::size_t distinct_colors() const;
};

/// First-fit coloring along `order`, which must be a permutation of the
/// vertices (std::invalid_argument otherwise).
Coloring greedy_coloring(const Graph &g, std::span<const Vertex> order);

/// A clique grown greedily from each start vertex; the largest one found.
std::vector<Vertex> greedy_clique(const Graph &g);

/// Exact decision procedure: a proper coloring with at most k colors, or
/// std::nullopt when none exists.
///
/// Branch and bound over DSATUR order (most saturated uncolored vertex,
/// lowest index on ties). A vertex may only take colors 0..(max used)+1,
/// which removes palette permutations from the search. Output is
/// deterministic for fixed (g, k).
std::optional<Coloring> k_coloring(const Graph &g, std::size_t k);

/// χ(G). Searches k upward from a greedy clique size; 0 for the empty graph.
std::size_t chromatic_number(const Graph &g);

/// An optimal coloring (palette == chromatic_number(g)).
Coloring optimal_coloring(const Graph &g);

/// Maximum chromatic number over all radius-r balls; 0 for the empty graph.
std::size_t local_chromatic(const Graph &g, std::size_t r);

/// Equivalent to local_chromatic(g, r) <= c, but stops at the first ball
/// that is not c-colorable.
bool local_chromatic_at_most(const Graph &g, std::size_t r, std::size_t c);

/// True iff no edge is monochromatic. Throws std::invalid_argument if the
/// coloring does not cover every vertex.
bool verify_coloring(const Graph &g, const Coloring &col);

/// "v c" per line, 0-based, ascending v.
void write_coloring(std::ostream &out, const Coloring &col);
Coloring parse_coloring(std::istream &in, std::size_t n);

} // namespace ballcarve
