#include <doctest.h>

#include "ballcarve/generators.hpp"
#include "ballcarve/graph.hpp"
#include "brute_force.hpp"

using namespace ballcarve;

namespace {

std::vector<Vertex> sorted(std::initializer_list<Vertex> xs) {
  std::vector<Vertex> v(xs);
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("graph construction normalizes and validates edges") {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}});
  CHECK(g.num_edges() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("balls on C_9") {
  Graph c9 = cycle(9);
  CHECK(ball(c9, 0, 1).members() == sorted({8, 0, 1}));
  CHECK(ball(c9, 0, 2).members() == sorted({7, 8, 0, 1, 2}));
  for (Vertex v = 0; v < 9; ++v)
    CHECK(ball(c9, v, 0).members() == std::vector<Vertex>{v});
  CHECK_THROWS_AS(ball(c9, 9, 1), std::out_of_range);
}

TEST_CASE("spheres") {
  Graph c9 = cycle(9);
  CHECK(sphere(c9, 0, 1).members() == sorted({1, 8}));
  CHECK(sphere(c9, 0, 0).members() == std::vector<Vertex>{0});
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(sphere(p3, 0, 5).empty());
}

TEST_CASE("outer boundary") {
  Graph c9 = cycle(9);
  CHECK(outer_boundary(c9, VertexSet(9, std::vector<Vertex>{0})).members() ==
        sorted({1, 8}));
  CHECK(outer_boundary(c9, VertexSet::full(9)).empty());
  VertexSet u1 = ball(c9, 0, 1);
  CHECK(outer_boundary(c9, u1).members() == sorted({2, 7}));
  CHECK(outer_boundary(c9, u1) == sphere(c9, 0, 2));
}

TEST_CASE("induced subgraphs") {
  SUBCASE("three vertices of K_4 form K_3") {
    auto view = induced(complete(4), VertexSet(4, std::vector<Vertex>{0, 2, 3}));
    CHECK(view.graph == complete(3));
    CHECK(view.to_parent == std::vector<Vertex>{0, 2, 3});
    CHECK(view.from_parent[1] == SubgraphView::npos);
    CHECK(view.from_parent[3] == 2);
  }
  SUBCASE("an arc of C_9 is a path") {
    auto view = induced(cycle(9), VertexSet(9, std::vector<Vertex>{2, 3, 4, 5, 6, 7}));
    CHECK(view.graph == Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  }
  SUBCASE("empty selection") {
    auto view = induced(cycle(9), VertexSet(9));
    CHECK(view.graph.order() == 0);
    CHECK(view.graph.num_edges() == 0);
  }
}

TEST_CASE("components are ordered by smallest member") {
  CHECK(components(cycle(9)).size() == 1);
  auto isolated = components(Graph(2));
  REQUIRE(isolated.size() == 2);
  CHECK(isolated[0].members() == std::vector<Vertex>{0});
  CHECK(isolated[1].members() == std::vector<Vertex>{1});
  Graph k3p2(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto comps = components(k3p2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].members() == sorted({0, 1, 2}));
  CHECK(comps[1].members() == sorted({3, 4}));
}

TEST_CASE("ball and sphere agree with all-pairs distances on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 23;
    Graph g = gnp(n, Rational(1, 2 + seed % 6), seed);
    auto dist = testing::all_pairs(g);
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t rad = 0; rad <= 4; ++rad) {
        VertexSet b = ball(g, v, rad);
        VertexSet s = sphere(g, v, rad);
        for (Vertex u = 0; u < n; ++u) {
          CHECK(b.contains(u) == (dist[v][u] <= rad));
          CHECK(s.contains(u) == (dist[v][u] == rad));
        }
        CHECK(b.is_subset_of(ball(g, v, rad + 1)));
        if (rad >= 1) {
          VertexSet boundary = outer_boundary(g, ball(g, v, rad - 1));
          CHECK(s == (boundary & b));
          // Every boundary vertex of a ball is reachable, so the identity is
          // exact.
          CHECK(s == boundary);
        }
      }
      VertexSet reach(n);
      for (std::size_t rad = 0; rad < n; ++rad)
        reach |= sphere(g, v, rad);
      for (Vertex u = 0; u < n; ++u)
        CHECK(reach.contains(u) == (dist[v][u] < n));
    }
  }
}

TEST_CASE("induced subgraphs compose") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 6 + seed % 10;
    Graph g = gnp(n, Rational(2, 5), seed);
    VertexSet s(n), t(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((v * 7 + seed) % 3 != 0)
        s.insert(v);
      if (s.contains(v) && (v + seed) % 2 == 0)
        t.insert(v);
    }
    SubgraphView outer = induced(g, s);
    VertexSet t_local(outer.graph.order());
    t.for_each([&](Vertex v) { t_local.insert(outer.from_parent[v]); });
    SubgraphView nested = induced(outer.graph, t_local);
    SubgraphView direct = induced(g, t);
    CHECK(nested.graph == direct.graph);
    for (Vertex i = 0; i < nested.to_parent.size(); ++i)
      CHECK(outer.to_parent[nested.to_parent[i]] == direct.to_parent[i]);
    for (Vertex i = 0; i < outer.to_parent.size(); ++i)
      CHECK(outer.from_parent[outer.to_parent[i]] == i);
  }
}
