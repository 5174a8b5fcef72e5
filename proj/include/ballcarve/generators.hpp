#pragma once

#include <cstddef>
#include <cstdint>

#include "ballcarve/graph.hpp"
#include "ballcarve/rational.hpp"

namespace ballcarve {

/// C_n, edges i ~ i+1 mod n. Requires n >= 3.
Graph cycle(std::size_t n);

/// K_n. Requires n >= 1.
Graph complete(std::size_t n);

/// Mycielskian: vertex v stays v, its shadow v' is n + v and the apex is 2n.
/// Edges: E, u'v and uv' for uv in E, and v'z for every v.
Graph mycielski(const Graph &g);

/// Cone over g with `levels` layers. Copy i of vertex v is i*n + v and the
/// apex is levels*n. Layer 0 carries E, consecutive layers are joined by
/// (u,i)(v,i+1) for uv in E, and the top layer is joined to the apex.
/// levels == 2 gives exactly mycielski(g).
Graph generalized_mycielski(const Graph &g, std::size_t levels);

/// Kneser graph K(n, k): k-subsets of {1..n} in lexicographic order,
/// adjacent when disjoint. Requires n >= 2k >= 2.
Graph kneser(std::size_t n, std::size_t k);

/// Erdős–Rényi G(n, p). Pairs (i, j), i < j, are visited in lexicographic
/// order and each consumes one draw x of std::mt19937_64 seeded with `seed`;
/// the edge is present iff x * den(p) < num(p) * 2^64. The output is fixed
/// by (n, p, seed) on every platform.
Graph gnp(std::size_t n, const Rational &p, std::uint64_t seed);

} // namespace ballcarve
