#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ballcarve {

using Vertex = std::uint32_t;

/// Membership set over the vertex range [0, universe).
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v) { bits_.set(v); }
  void erase(Vertex v) { bits_.reset(v); }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  /// Calls fn(v) for every member in ascending order.
  template <typename Fn> void for_each(Fn &&fn) const {
    for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i))
      fn(static_cast<Vertex>(i));
  }

  VertexSet &operator|=(const VertexSet &o);
  VertexSet &operator&=(const VertexSet &o);
  VertexSet &operator-=(const VertexSet &o);
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  bool is_subset_of(const VertexSet &o) const;
  bool intersects(const VertexSet &o) const;

  friend bool operator==(const VertexSet &a, const VertexSet &b) {
    return a.bits_ == b.bits_;
  }

private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Construction normalizes the edge list: duplicates
/// are dropped, while loops and out-of-range endpoints throw
/// std::invalid_argument.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                            edges.size())) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges (u, v) with u < v in ascending lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.adj_ == b.adj_;
  }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Induced subgraph G[S] together with the index maps back to the parent.
struct SubgraphView {
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  Graph graph;
  std::vector<Vertex> to_parent;   // subgraph index -> parent index
  std::vector<Vertex> from_parent; // parent index -> subgraph index or npos

  VertexSet lift(const VertexSet &local) const;
};

/// {u : d_G(u, v) <= radius}.
VertexSet ball(const Graph &g, Vertex v, std::size_t radius);

/// {u : d_G(u, v) == radius}.
VertexSet sphere(const Graph &g, Vertex v, std::size_t radius);

/// Vertices outside s that have a neighbor in s.
VertexSet outer_boundary(const Graph &g, const VertexSet &s);

/// BFS distances from v, or -1 for unreachable vertices. Traversal stays
/// inside `within` when it is given.
std::vector<std::int64_t> distances(const Graph &g, Vertex v,
                                    const VertexSet *within = nullptr);

SubgraphView induced(const Graph &g, const VertexSet &s);

/// Connected components ordered by their smallest member.
std::vector<VertexSet> components(const Graph &g);

bool is_connected(const Graph &g);

} // namespace ballcarve
