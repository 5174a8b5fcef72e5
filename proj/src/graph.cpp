#include "ballcarve/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace ballcarve {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) {
    if (v >= universe)
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside set universe");
    bits_.set(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet &VertexSet::operator|=(const VertexSet &o) {
  bits_ |= o.bits_;
  return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &o) {
  bits_ &= o.bits_;
  return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &o) {
  bits_ -= o.bits_;
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet &o) const {
  return bits_.is_subset_of(o.bits_);
}

bool VertexSet::intersects(const VertexSet &o) const {
  return bits_.intersects(o.bits_);
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
    : adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto &nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    num_edges_ += nbrs.size();
  }
  num_edges_ /= 2;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto &nbrs : adj_)
    d = std::max(d, nbrs.size());
  return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

VertexSet SubgraphView::lift(const VertexSet &local) const {
  VertexSet out(from_parent.size());
  local.for_each([&](Vertex v) { out.insert(to_parent[v]); });
  return out;
}

std::vector<std::int64_t> distances(const Graph &g, Vertex v,
                                    const VertexSet *within) {
  std::vector<std::int64_t> dist(g.order(), -1);
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != -1 || (within && !within->contains(y)))
        continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

namespace {

// BFS truncated at `radius`; fills `in_ball` and `at_radius`.
void bounded_bfs(const Graph &g, Vertex v, std::size_t radius,
                 VertexSet &in_ball, VertexSet &at_radius) {
  if (v >= g.order())
    throw std::out_of_range("center " + std::to_string(v) + " out of range");
  std::vector<Vertex> frontier{v};
  in_ball.insert(v);
  for (std::size_t d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y : g.neighbors(x))
        if (!in_ball.contains(y)) {
          in_ball.insert(y);
          next.push_back(y);
        }
    frontier = std::move(next);
  }
  for (Vertex x : frontier)
    at_radius.insert(x);
}

} // namespace

VertexSet ball(const Graph &g, Vertex v, std::size_t radius) {
  VertexSet in_ball(g.order()), at_radius(g.order());
  bounded_bfs(g, v, radius, in_ball, at_radius);
  return in_ball;
}

VertexSet sphere(const Graph &g, Vertex v, std::size_t radius) {
  VertexSet in_ball(g.order()), at_radius(g.order());
  bounded_bfs(g, v, radius, in_ball, at_radius);
  return at_radius;
}

VertexSet outer_boundary(const Graph &g, const VertexSet &s) {
  VertexSet out(g.order());
  s.for_each([&](Vertex v) {
    for (Vertex u : g.neighbors(v))
      if (!s.contains(u))
        out.insert(u);
  });
  return out;
}

SubgraphView induced(const Graph &g, const VertexSet &s) {
  SubgraphView view;
  view.to_parent = s.members();
  view.from_parent.assign(g.order(), SubgraphView::npos);
  for (Vertex i = 0; i < view.to_parent.size(); ++i)
    view.from_parent[view.to_parent[i]] = i;

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < view.to_parent.size(); ++i)
    for (Vertex y : g.neighbors(view.to_parent[i])) {
      Vertex j = view.from_parent[y];
      if (j != SubgraphView::npos && i < j)
        edges.emplace_back(i, j);
    }
  view.graph = Graph(view.to_parent.size(), edges);
  return view;
}

std::vector<VertexSet> components(const Graph &g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen.contains(v))
      continue;
    VertexSet comp(g.order());
    std::vector<Vertex> stack{v};
    comp.insert(v);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (!comp.contains(y)) {
          comp.insert(y);
          stack.push_back(y);
        }
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph &g) { return components(g).size() <= 1; }

} // namespace ballcarve
