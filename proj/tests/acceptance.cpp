// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ballcarve/bounds.hpp"
#include "ballcarve/chromatic.hpp"
#include "ballcarve/decomposition.hpp"
#include "ballcarve/generators.hpp"
#include "ballcarve/oracle.hpp"
#include "brute_force.hpp"

using namespace ballcarve;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string &what) {
    if (!ok) {
      passed = false;
      if (failures.size() < 10)
        failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CorpusGraph {
  Graph graph;
  std::string label;
};

// 200 graphs: n cycles through [1, 200], p through {1/50, 1/20, 1/10, 3/10},
// seeds 1000..1199.
std::vector<CorpusGraph> corpus() {
  const std::array<Rational, 4> probabilities{Rational(1, 50), Rational(1, 20),
                                              Rational(1, 10), Rational(3, 10)};
  std::vector<CorpusGraph> out;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + (i * 97) % 200;
    const Rational &p = probabilities[i % 4];
    const std::uint64_t seed = 1000 + i;
    std::ostringstream label;
    label << "G(" << n << ", " << to_string(p) << ", seed " << seed << ")";
    out.push_back({gnp(n, p, seed), label.str()});
  }
  return out;
}

Outcome decomposition_suite(const std::vector<CorpusGraph> &graphs) {
  Outcome o;
  auto start = Clock::now();
  std::size_t runs = 0;
  for (const auto &[g, label] : graphs)
    for (std::size_t r = 1; r <= 3; ++r) {
      DecompositionReport rep = verify_decomposition(g, r, carve(g, r));
      ++runs;
      for (const auto &check : rep.checks)
        o.expect(check.passed, label + " r=" + std::to_string(r) + ": " +
                                   check.name + " " + check.detail);
    }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s >= 60 s");
  o.summary = std::to_string(runs) + " carvings, 5 checks each, " +
              std::to_string(elapsed) + " s";
  return o;
}

Outcome recursive_coloring_suite(const std::vector<CorpusGraph> &graphs) {
  Outcome o;
  std::size_t eligible = 0, max_levels = 0;
  for (const auto &[g, label] : graphs)
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t c = 2; c <= 3; ++c) {
        if (!local_chromatic_at_most(g, r, c))
          continue;
        ++eligible;
        const std::string tag = label + " r=" + std::to_string(r) +
                                " c=" + std::to_string(c);
        RecursiveColoringReport rep;
        try {
          rep = recursive_color(g, r, c);
        } catch (const std::exception &e) {
          o.expect(false, tag + ": " + e.what());
          continue;
        }
        o.expect(verify_coloring(g, rep.coloring), tag + ": improper coloring");
        o.expect(rep.coloring.palette <= c * rep.levels,
                 tag + ": " + std::to_string(rep.coloring.palette) +
                     " colors exceed c * levels");
        o.expect(rep.levels <= level_bound(g.order(), r),
                 tag + ": " + std::to_string(rep.levels) +
                     " levels exceed level_bound");
        max_levels = std::max(max_levels, rep.levels);
      }
  o.expect(eligible > 0, "no corpus graph satisfied the local bound");
  o.summary = std::to_string(eligible) + " (graph, r, c) cases with lchi_r <= c, "
              "max depth " + std::to_string(max_levels);
  return o;
}

Outcome theorem_grid() {
  Outcome o;
  auto start = Clock::now();
  std::size_t cells = 0;
  std::uint64_t checked = 0;
  std::int64_t tightest = 1 << 30;
  for (std::uint64_t n = 1; n <= 60; ++n)
    for (std::uint64_t r = 1; r <= 3; ++r)
      for (std::uint64_t c = 2; c <= 4; ++c) {
        TheoremConsistencyReport rep = theorem_consistency(n, r, c);
        ++cells;
        checked += rep.v_max;
        if (rep.v_max > 0)
          tightest = std::min(tightest, rep.min_slack);
        for (const auto &v : rep.violations)
          o.expect(false, "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                              " c=" + std::to_string(c) + " v=" +
                              std::to_string(v.v));
      }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s >= 10 s");
  o.summary = std::to_string(cells) + " parameter cells, " +
              std::to_string(checked) + " orders checked, min slack " +
              std::to_string(tightest) + ", " + std::to_string(elapsed) + " s";
  return o;
}

Outcome base_case_grid() {
  Outcome o;
  std::size_t cells = 0;
  for (std::uint64_t c = 2; c <= 6; ++c)
    for (std::uint64_t r = 1; r <= 5; ++r)
      for (std::uint64_t n = 1; n <= c; ++n) {
        ++cells;
        const Rational rising = rising_factorial(Rational(n, c) + Rational(r, 2), r + 1);
        const Rational power = rpow(Rational(n, c) + r, r + 1);
        const Rational top = Rational(ipow(BigInt(r + 1), r + 1));
        const std::string tag = "n=" + std::to_string(n) + " r=" +
                                std::to_string(r) + " c=" + std::to_string(c);
        o.expect(rising <= power, tag + ": rising product exceeds power");
        o.expect(power <= top, tag + ": power exceeds (r+1)^(r+1)");
        o.expect(bound_gen(n, r, c) <= 1, tag + ": bound exceeds 1");
      }
  o.summary = std::to_string(cells) + " cells, exact rationals";
  return o;
}

Outcome induction_grid() {
  Outcome o;
  std::size_t cells = 0;
  const std::array<Rational, 3> offsets{Rational(1, 2), Rational(1), Rational(3, 2)};
  for (std::uint64_t c = 2; c <= 5; ++c)
    for (std::uint64_t r = 1; r <= 4; ++r)
      for (std::uint64_t n = c + 1; n <= 60; ++n)
        for (const Rational &a : offsets) {
          ++cells;
          o.expect(check_induction_step(n, r, c, a),
                   "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                       " c=" + std::to_string(c) + " a=" + to_string(a));
        }
  o.summary = std::to_string(cells) + " cells";
  return o;
}

Outcome oracle_ground_truth() {
  Outcome o;
  auto start = Clock::now();
  OracleResult res = f_oracle(2, 1, 2, 5, Pruning::Off);
  const double elapsed = seconds_since(start);
  o.expect(res.mode == OracleResult::Mode::Exact, "f_2(2,1) not exact");
  o.expect(res.value == 4, "f_2(2,1) = " + std::to_string(res.value));
  o.expect(res.witness && are_isomorphic(*res.witness, cycle(5)),
           "witness is not a 5-cycle");
  // 2^3 + 2^6 + 2^10 labeled graphs on 3, 4 and 5 vertices.
  o.expect(res.graphs_examined == 8 + 64 + 1024,
           "examined " + std::to_string(res.graphs_examined) + " graphs");
  o.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s >= 5 s");

  std::size_t exact = 0;
  for (std::uint64_t n = 1; n <= 4; ++n)
    for (std::size_t r = 1; r <= 2; ++r)
      for (std::size_t c = 2; c <= 3; ++c) {
        OracleResult other = f_oracle(n, r, c, 6);
        if (other.mode != OracleResult::Mode::Exact)
          continue;
        ++exact;
        o.expect(BigInt(other.value) >= ceil(bound_gen(n, r, c)) - 1,
                 "oracle below the lower bound at n=" + std::to_string(n) +
                     " r=" + std::to_string(r) + " c=" + std::to_string(c));
      }
  o.summary = "f_2(2,1) = 4 via " + std::to_string(res.witnesses_found) +
              " labeled 5-cycles, " + std::to_string(elapsed) + " s; " +
              std::to_string(exact) + " further exact values above the bound";
  return o;
}

Outcome chromatic_fixtures() {
  Outcome o;
  o.expect(chromatic_number(cycle(5)) == 3, "chi(C_5) != 3");
  for (std::size_t n = 1; n <= 8; ++n)
    o.expect(chromatic_number(complete(n)) == n,
             "chi(K_" + std::to_string(n) + ") != n");
  Graph grotzsch = mycielski(cycle(5));
  o.expect(grotzsch.order() == 11, "Grötzsch graph order");
  o.expect(!testing::has_triangle(grotzsch), "Grötzsch graph has a triangle");
  o.expect(chromatic_number(grotzsch) == 4, "chi(Grötzsch) != 4");
  o.expect(chromatic_number(kneser(5, 2)) == 3, "chi(Petersen) != 3");
  // Witness for f_2(3,1) < 11: 11 vertices, lchi_1 = 2, chi = 4 > 3.
  o.expect(local_chromatic(grotzsch, 1) == 2, "lchi_1(Grötzsch) != 2");
  o.summary = "C_5, K_1..K_8, Grötzsch, Petersen; f_2(3,1) < 11";
  return o;
}

Outcome solver_equivalence() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const Rational p(1 + seed % 9, 10);
    Graph g = gnp(n, p, 5000 + seed);
    ++graphs;
    const std::size_t solver = chromatic_number(g);
    const std::size_t brute = testing::brute_chromatic(g);
    o.expect(solver == brute, "seed " + std::to_string(5000 + seed) +
                                  ": solver " + std::to_string(solver) +
                                  " vs brute force " + std::to_string(brute));
  }
  o.summary = std::to_string(graphs) + " graphs with n <= 7";
  return o;
}

} // namespace

int main() {
  const auto graphs = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 decomposition property suite", [&] { return decomposition_suite(graphs); }},
      {"2 recursive coloring guarantee", [&] { return recursive_coloring_suite(graphs); }},
      {"3 lower bound vs carving depth", theorem_grid},
      {"4 base case bound <= 1", base_case_grid},
      {"5 induction step identity", induction_grid},
      {"6 oracle ground truth", oracle_ground_truth},
      {"7 chromatic fixtures", chromatic_fixtures},
      {"8 solver vs brute force", solver_equivalence},
  };

  bool all = true;
  for (const auto &[name, run] : criteria) {
    Outcome o = run();
    all = all && o.passed;
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(),
                o.summary.c_str());
    for (const auto &f : o.failures)
      std::printf("       %s\n", f.c_str());
  }
  std::printf("%s\n", all ? "all acceptance criteria passed"
                          : "acceptance criteria FAILED");
  return all ? 0 : 1;
}
