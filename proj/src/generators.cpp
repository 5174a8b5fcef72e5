#include "ballcarve/generators.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ballcarve {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph cycle(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("cycle requires n >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("complete requires n >= 1");
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph generalized_mycielski(const Graph &g, std::size_t levels) {
  if (levels < 1)
    throw std::invalid_argument("generalized_mycielski requires levels >= 1");
  const auto n = static_cast<Vertex>(g.order());
  auto copy = [n](std::size_t layer, Vertex v) {
    return static_cast<Vertex>(layer * n + v);
  };
  const Vertex apex = copy(levels, 0);

  EdgeList edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    for (std::size_t i = 0; i + 1 < levels; ++i) {
      edges.emplace_back(copy(i, u), copy(i + 1, v));
      edges.emplace_back(copy(i, v), copy(i + 1, u));
    }
  }
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(copy(levels - 1, v), apex);
  return Graph(levels * n + 1, edges);
}

Graph mycielski(const Graph &g) { return generalized_mycielski(g, 2); }

Graph kneser(std::size_t n, std::size_t k) {
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("kneser requires n >= 2k >= 2");
  if (n > 63)
    throw std::invalid_argument("kneser supports n <= 63");

  // k-subsets as bitmasks, generated in lexicographic order of their
  // sorted element lists.
  std::vector<std::uint64_t> subsets;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx)
      mask |= std::uint64_t{1} << i;
    subsets.push_back(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1))
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }

  EdgeList edges;
  for (Vertex a = 0; a < subsets.size(); ++a)
    for (Vertex b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0)
        edges.emplace_back(a, b);
  return Graph(subsets.size(), edges);
}

Graph gnp(std::size_t n, const Rational &p, std::uint64_t seed) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("gnp requires 0 <= p <= 1");
  using u128 = unsigned __int128;
  const auto num = boost::multiprecision::numerator(p).convert_to<std::uint64_t>();
  const auto den = boost::multiprecision::denominator(p);
  if (den > std::numeric_limits<std::uint64_t>::max())
    throw std::invalid_argument("gnp denominator exceeds 64 bits");
  const u128 den64 = den.convert_to<std::uint64_t>();
  const u128 threshold = static_cast<u128>(num) << 64;

  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (static_cast<u128>(rng()) * den64 < threshold)
        edges.emplace_back(i, j);
  return Graph(n, edges);
}

} // namespace ballcarve
