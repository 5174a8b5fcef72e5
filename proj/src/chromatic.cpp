#include "ballcarve/chromatic.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ballcarve/dimacs.hpp"

namespace ballcarve {

Coloring Coloring::from_colors(std::vector<Color> colors) {
  Coloring col;
  col.colors = std::move(colors);
  for (Color c : col.colors)
    col.palette = std::max<std::size_t>(col.palette, c + 1);
  return col;
}

std::size_t Coloring::distinct_colors() const {
  return std::set<Color>(colors.begin(), colors.end()).size();
}

Coloring greedy_coloring(const Graph &g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n)
    throw std::invalid_argument("order is not a permutation of the vertices");
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v])
      throw std::invalid_argument("order is not a permutation of the vertices");
    seen[v] = true;
  }

  constexpr Color kUncolored = static_cast<Color>(-1);
  std::vector<Color> colors(n, kUncolored);
  std::vector<std::size_t> stamp(g.max_degree() + 2, n);
  for (Vertex v : order) {
    for (Vertex u : g.neighbors(v))
      if (colors[u] != kUncolored && colors[u] < stamp.size())
        stamp[colors[u]] = v;
    Color c = 0;
    while (stamp[c] == v)
      ++c;
    colors[v] = c;
  }
  return Coloring::from_colors(std::move(colors));
}

std::vector<Vertex> greedy_clique(const Graph &g) {
  std::vector<Vertex> best;
  for (Vertex start = 0; start < g.order(); ++start) {
    std::vector<Vertex> clique{start};
    std::vector<Vertex> candidates(g.neighbors(start).begin(),
                                   g.neighbors(start).end());
    while (!candidates.empty()) {
      // Highest degree candidate first, lowest index on ties.
      auto pick = std::max_element(
          candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) < g.degree(b) ||
                   (g.degree(a) == g.degree(b) && a > b);
          });
      Vertex v = *pick;
      clique.push_back(v);
      std::erase_if(candidates,
                    [&](Vertex u) { return u == v || !g.adjacent(u, v); });
    }
    if (clique.size() > best.size())
      best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

class DsaturSearch {
public:
  DsaturSearch(const Graph &g, std::size_t k)
      : g_(g), k_(k), colors_(g.order(), kUncolored),
        neighbor_colors_(g.order() * k, 0), saturation_(g.order(), 0) {}

  bool run() { return extend(0, 0); }
  const std::vector<Color> &colors() const { return colors_; }

private:
  static constexpr Color kUncolored = static_cast<Color>(-1);

  std::uint32_t &count(Vertex v, Color c) { return neighbor_colors_[v * k_ + c]; }

  // Most saturated uncolored vertex; ties go to higher degree, then to the
  // lower index.
  Vertex select() const {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < colors_.size(); ++v) {
      if (colors_[v] != kUncolored)
        continue;
      if (!found || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           g_.degree(v) > g_.degree(best))) {
        best = v;
        found = true;
      }
    }
    return best;
  }

  void assign(Vertex v, Color c) {
    colors_[v] = c;
    for (Vertex u : g_.neighbors(v))
      if (count(u, c)++ == 0)
        ++saturation_[u];
  }

  void unassign(Vertex v) {
    Color c = colors_[v];
    colors_[v] = kUncolored;
    for (Vertex u : g_.neighbors(v))
      if (--count(u, c) == 0)
        --saturation_[u];
  }

  bool extend(std::size_t colored, std::size_t used) {
    if (colored == colors_.size())
      return true;
    Vertex v = select();
    if (saturation_[v] >= k_)
      return false;
    const std::size_t limit = std::min(k_, used + 1);
    for (Color c = 0; c < limit; ++c) {
      if (count(v, c) != 0)
        continue;
      assign(v, c);
      if (extend(colored + 1, std::max<std::size_t>(used, c + 1)))
        return true;
      unassign(v);
    }
    return false;
  }

  const Graph &g_;
  std::size_t k_;
  std::vector<Color> colors_;
  std::vector<std::uint32_t> neighbor_colors_;
  std::vector<std::size_t> saturation_;
};

// Repeatedly strips vertices with fewer than k remaining neighbors. Returns
// the stripped vertices in removal order; `core` keeps the rest.
std::vector<Vertex> peel(const Graph &g, std::size_t k, VertexSet &core) {
  const std::size_t n = g.order();
  core = VertexSet::full(n);
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> removed, queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k)
      queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    core.erase(v);
    removed.push_back(v);
    for (Vertex u : g.neighbors(v))
      if (core.contains(u) && degree[u]-- == k)
        queue.push_back(u);
  }
  return removed;
}

} // namespace

std::optional<Coloring> k_coloring(const Graph &g, std::size_t k) {
  if (g.order() == 0)
    return Coloring{};
  if (k == 0)
    return std::nullopt;

  constexpr Color kUncolored = static_cast<Color>(-1);
  std::vector<Color> colors(g.order(), kUncolored);

  VertexSet core;
  const std::vector<Vertex> peeled = peel(g, k, core);
  if (!core.empty()) {
    SubgraphView core_view = induced(g, core);
    for (const VertexSet &comp : components(core_view.graph)) {
      SubgraphView piece = induced(core_view.graph, comp);
      if (greedy_clique(piece.graph).size() > k)
        return std::nullopt;
      DsaturSearch search(piece.graph, k);
      if (!search.run())
        return std::nullopt;
      for (Vertex i = 0; i < piece.to_parent.size(); ++i)
        colors[core_view.to_parent[piece.to_parent[i]]] = search.colors()[i];
    }
  }

  // Each peeled vertex had fewer than k neighbors left when it was removed,
  // and exactly those are colored before it in reverse removal order.
  std::vector<bool> taken(k);
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    std::fill(taken.begin(), taken.end(), false);
    for (Vertex u : g.neighbors(*it))
      if (colors[u] != kUncolored)
        taken[colors[u]] = true;
    colors[*it] = static_cast<Color>(
        std::find(taken.begin(), taken.end(), false) - taken.begin());
  }
  return Coloring::from_colors(std::move(colors));
}

Coloring optimal_coloring(const Graph &g) {
  if (g.order() == 0)
    return Coloring{};
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < order.size(); ++v)
    order[v] = v;
  Coloring upper = greedy_coloring(g, order);
  for (std::size_t k = greedy_clique(g).size(); k < upper.palette; ++k)
    if (auto col = k_coloring(g, k))
      return *col;
  return upper;
}

std::size_t chromatic_number(const Graph &g) {
  return optimal_coloring(g).palette;
}

std::size_t local_chromatic(const Graph &g, std::size_t r) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, chromatic_number(induced(g, ball(g, v, r)).graph));
  return best;
}

bool local_chromatic_at_most(const Graph &g, std::size_t r, std::size_t c) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!k_coloring(induced(g, ball(g, v, r)).graph, c))
      return false;
  return true;
}

bool verify_coloring(const Graph &g, const Coloring &col) {
  if (col.colors.size() != g.order())
    throw std::invalid_argument("coloring covers " +
                                std::to_string(col.colors.size()) + " of " +
                                std::to_string(g.order()) + " vertices");
  for (auto [u, v] : g.edges())
    if (col.colors[u] == col.colors[v])
      return false;
  return true;
}

void write_coloring(std::ostream &out, const Coloring &col) {
  for (std::size_t v = 0; v < col.colors.size(); ++v)
    out << v << ' ' << col.colors[v] << '\n';
}

Coloring parse_coloring(std::istream &in, std::size_t n) {
  constexpr Color kUnset = static_cast<Color>(-1);
  std::vector<Color> colors(n, kUnset);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    long long v = 0, c = 0;
    if (!(fields >> v))
      continue;
    if (!(fields >> c) || v < 0 || c < 0 ||
        static_cast<unsigned long long>(v) >= n)
      throw ParseError(lineno, "expected 'v c' with 0 <= v < " +
                                   std::to_string(n));
    if (colors[v] != kUnset)
      throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
    colors[v] = static_cast<Color>(c);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (colors[v] == kUnset)
      throw ParseError(lineno, "vertex " + std::to_string(v) + " uncolored");
  return Coloring::from_colors(std::move(colors));
}

} // namespace ballcarve
