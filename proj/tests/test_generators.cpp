#include <doctest.h>

#include "ballcarve/chromatic.hpp"
#include "ballcarve/generators.hpp"
#include "ballcarve/oracle.hpp"
#include "brute_force.hpp"

using namespace ballcarve;

TEST_CASE("cycles") {
  CHECK(cycle(3) == complete(3));
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(cycle(6)) == 2);
  CHECK(cycle(7).num_edges() == 7);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("complete graphs") {
  CHECK(complete(1).num_edges() == 0);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(local_chromatic(complete(4), 1) == 4);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("Mycielskian") {
  Graph k2 = complete(2);
  Graph m = mycielski(k2);
  CHECK(m.order() == 5);
  CHECK(are_isomorphic(m, cycle(5)));
  CHECK(min_relabel_mask(m) == min_relabel_mask(cycle(5)));

  Graph grotzsch = mycielski(cycle(5));
  CHECK(grotzsch.order() == 11);
  CHECK(grotzsch.num_edges() == 20);
  CHECK_FALSE(testing::has_triangle(grotzsch));
  CHECK(chromatic_number(grotzsch) == 4);

  Graph from_point = mycielski(Graph(1));
  CHECK(from_point == Graph(3, {{1, 2}}));
  CHECK(chromatic_number(from_point) == 2);
}

TEST_CASE("Mycielskian raises chi by one and keeps triangle-freeness") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 12;
    Graph g = gnp(n, Rational(1 + seed % 3, 6), seed + 77);
    Graph m = mycielski(g);
    CHECK(chromatic_number(m) == chromatic_number(g) + 1);
    if (!testing::has_triangle(g))
      CHECK_FALSE(testing::has_triangle(m));
  }
}

TEST_CASE("generalized Mycielskian") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gnp(1 + seed % 5, Rational(1, 2), seed);
    CHECK(generalized_mycielski(g, 2) == mycielski(g));
    CHECK(are_isomorphic(generalized_mycielski(g, 2), mycielski(g)));
  }
  // One layer is the join with a single apex.
  for (std::size_t n = 3; n <= 7; ++n) {
    Graph apex = generalized_mycielski(cycle(n), 1);
    CHECK(apex.order() == n + 1);
    CHECK(apex.degree(static_cast<Vertex>(n)) == n);
    CHECK(chromatic_number(apex) == chromatic_number(cycle(n)) + 1);
  }

  Graph g3 = generalized_mycielski(cycle(5), 3);
  CHECK(g3.order() == 16);
  CHECK(chromatic_number(g3) == 4);
  CHECK(testing::brute_chromatic(generalized_mycielski(cycle(5), 1)) == 4);
  // Layer 0 is a copy of C_5, so the odd girth stays 5 at every depth.
  CHECK(testing::odd_girth(g3) == 5);
  CHECK(testing::odd_girth(generalized_mycielski(cycle(7), 3)) == 7);
  CHECK(testing::odd_girth(generalized_mycielski(cycle(9), 3)) == 7);
  CHECK_THROWS_AS(generalized_mycielski(cycle(5), 0), std::invalid_argument);
}

TEST_CASE("Kneser graphs") {
  Graph petersen = kneser(5, 2);
  CHECK(petersen.order() == 10);
  CHECK(petersen.num_edges() == 15);
  for (Vertex v = 0; v < 10; ++v)
    CHECK(petersen.degree(v) == 3);
  CHECK(chromatic_number(petersen) == 3);
  CHECK(testing::odd_girth(petersen) == 5);
  // {1,2} is vertex 0, {3,4} is vertex 7 in lexicographic order.
  CHECK(petersen.adjacent(0, 7));
  CHECK_FALSE(petersen.adjacent(0, 1));

  for (std::size_t k = 1; k <= 4; ++k) {
    Graph matching = kneser(2 * k, k);
    for (Vertex v = 0; v < matching.order(); ++v)
      CHECK(matching.degree(v) == 1);
    CHECK(chromatic_number(matching) == 2);
  }

  auto binom = [](std::size_t n, std::size_t k) {
    std::size_t b = 1;
    for (std::size_t i = 1; i <= k; ++i)
      b = b * (n - k + i) / i;
    return b;
  };
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      Graph g = kneser(n, k);
      CHECK(g.order() == binom(n, k));
      for (Vertex v = 0; v < g.order(); ++v)
        CHECK(g.degree(v) == binom(n - k, k));
    }
  CHECK_THROWS_AS(kneser(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(kneser(4, 0), std::invalid_argument);
}

TEST_CASE("G(n, p)") {
  CHECK(gnp(12, Rational(0), 5).num_edges() == 0);
  CHECK(gnp(12, Rational(1), 5) == complete(12));
  CHECK(gnp(20, Rational(1, 4), 42) == gnp(20, Rational(1, 4), 42));
  CHECK(gnp(20, Rational(1, 4), 42).num_edges() == 39);
  CHECK(gnp(200, Rational(1, 10), 7).num_edges() == 1899);
  CHECK_FALSE(gnp(20, Rational(1, 4), 42) == gnp(20, Rational(1, 4), 43));
  CHECK_THROWS_AS(gnp(5, Rational(3, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(gnp(5, Rational(-1, 2), 1), std::invalid_argument);
}
