#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballcarve/bounds.hpp"
#include "ballcarve/chromatic.hpp"
#include "ballcarve/decomposition.hpp"
#include "ballcarve/dimacs.hpp"
#include "ballcarve/generators.hpp"
#include "ballcarve/oracle.hpp"

namespace ballcarve::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input or argument problems; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string &path) {
  if (path == "-")
    return parse_dimacs(std::cin);
  return read_dimacs_file(path);
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string approx(const Rational &x) {
  std::ostringstream s;
  s << std::setprecision(12) << to_double(x);
  return s.str();
}

std::string exact_with_approx(const Rational &x) {
  return to_string(x) + " (≈" + approx(x) + ")";
}

std::string describe(const Graph &g) {
  const std::size_t n = g.order();
  if (g.num_edges() == n * (n - 1) / 2)
    return "K_" + std::to_string(n);
  bool two_regular = n >= 3;
  for (Vertex v = 0; v < n && two_regular; ++v)
    two_regular = g.degree(v) == 2;
  if (two_regular && is_connected(g))
    return std::to_string(n) + "-cycle";
  return std::to_string(n) + " vertices, " + std::to_string(g.num_edges()) +
         " edges";
}

Json checks_json(const std::vector<CheckResult> &checks) {
  Json arr = Json::array();
  for (const auto &c : checks)
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return arr;
}

Pruning parse_pruning(const std::string &s) {
  if (s == "auto")
    return Pruning::Auto;
  if (s == "on")
    return Pruning::On;
  if (s == "off")
    return Pruning::Off;
  throw UsageError("--prune must be auto, on or off");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Ball carving, local chromatic numbers and exact coloring", "ballcarve"};
  app.require_subcommand(1);

  bool json = false;
  std::string file;
  std::size_t r = 1, c = 2;
  std::function<int()> action;

  auto add_json = [&](CLI::App *sub) {
    sub->add_flag("--json", json, "Machine-readable output");
  };

  // chi / lchi
  auto *chi = app.add_subcommand("chi", "Chromatic number of a DIMACS graph");
  chi->add_option("file", file, "DIMACS .col file ('-' for stdin)")->required();
  add_json(chi);
  chi->callback([&] {
    action = [&] {
      const std::size_t value = chromatic_number(load_graph(file));
      if (json)
        out << Json{{"chi", value}}.dump() << '\n';
      else
        out << value << '\n';
      return kExitOk;
    };
  });

  auto *lchi = app.add_subcommand("lchi", "Radius-r local chromatic number");
  lchi->add_option("-r,--radius", r, "Ball radius")->required()->check(
      CLI::PositiveNumber);
  lchi->add_option("file", file, "DIMACS .col file ('-' for stdin)")->required();
  add_json(lchi);
  lchi->callback([&] {
    action = [&] {
      const std::size_t value = local_chromatic(load_graph(file), r);
      if (json)
        out << Json{{"r", r}, {"lchi", value}}.dump() << '\n';
      else
        out << value << '\n';
      return kExitOk;
    };
  });

  // decompose / verify-decomp / color
  auto *decompose = app.add_subcommand("decompose", "Ball-carving decomposition");
  decompose->add_option("-r,--radius", r, "Part radius")->required()->check(
      CLI::PositiveNumber);
  decompose->add_option("file", file, "DIMACS .col file ('-' for stdin)")
      ->required();
  decompose->callback([&] {
    action = [&] {
      out << to_json(carve(load_graph(file), r)) << '\n';
      return kExitOk;
    };
  });

  std::string decomposition_file;
  auto *verify_decomp = app.add_subcommand(
      "verify-decomp", "Check a decomposition (default: the carved one)");
  verify_decomp->add_option("-r,--radius", r, "Part radius")->required()->check(
      CLI::PositiveNumber);
  verify_decomp->add_option("file", file, "DIMACS .col file ('-' for stdin)")
      ->required();
  verify_decomp->add_option("--decomposition", decomposition_file,
                            "Decomposition JSON to check instead of carving");
  add_json(verify_decomp);
  verify_decomp->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      Decomposition d = decomposition_file.empty()
                            ? carve(g, r)
                            : decomposition_from_json(slurp(decomposition_file));
      DecompositionReport report = verify_decomposition(g, r, d);
      if (json) {
        out << Json{{"passed", report.passed()},
                    {"checks", checks_json(report.checks)}}
                   .dump(2)
            << '\n';
      } else {
        for (const auto &check : report.checks) {
          out << check.name << ": " << (check.passed ? "pass" : "FAIL");
          if (!check.detail.empty())
            out << " (" << check.detail << ")";
          out << '\n';
        }
        out << (report.passed() ? "all checks passed" : "verification failed")
            << '\n';
      }
      return report.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  auto *color = app.add_subcommand("color", "Recursive carving coloring");
  color->add_option("-r,--radius", r, "Ball radius")->required()->check(
      CLI::PositiveNumber);
  color->add_option("-c,--colors", c, "Local chromatic bound")->required()->check(
      CLI::PositiveNumber);
  color->add_option("file", file, "DIMACS .col file ('-' for stdin)")->required();
  add_json(color);
  color->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      RecursiveColoringReport report;
      try {
        report = recursive_color(g, r, c);
      } catch (const LocalChromaticExceeded &e) {
        if (json)
          out << Json{{"error", e.what()}, {"center", e.center()},
                      {"level", e.level()}}
                     .dump()
              << '\n';
        else
          err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
      }
      if (json) {
        out << Json{{"levels", report.levels},
                    {"palette", report.coloring.palette},
                    {"level_sizes", report.level_sizes},
                    {"level_bound", level_bound(g.order(), r)},
                    {"colors", report.coloring.colors}}
                   .dump()
            << '\n';
      } else {
        write_coloring(out, report.coloring);
        out << "levels: " << report.levels << '\n';
        out << "colors used: " << report.coloring.distinct_colors() << '\n';
      }
      return verify_coloring(g, report.coloring) ? kExitOk : kExitCheckFailed;
    };
  });

  // bound
  std::string bound_kind;
  std::uint64_t bn = 0, br = 0, bc = 0, bk = 0;
  auto *bound = app.add_subcommand("bound", "Exact bound calculators");
  bound->add_option("kind", bound_kind, "gen | kst | bb | upper-bogd | upper-erdos")
      ->required()
      ->check(CLI::IsMember({"gen", "kst", "bb", "upper-bogd", "upper-erdos"}));
  bound->add_option("--n", bn, "Chromatic target n");
  bound->add_option("--r", br, "Radius r");
  bound->add_option("--c", bc, "Local chromatic bound c");
  bound->add_option("--k", bk, "Index k");
  add_json(bound);
  bound->callback([&] {
    action = [&] {
      auto need = [&](std::uint64_t v, const char *flag) {
        if (v == 0)
          throw UsageError(std::string("bound ") + bound_kind + " needs " +
                           flag + " >= 1");
      };
      Json j{{"kind", bound_kind}};
      std::vector<std::string> lines;
      auto emit_rational = [&](const Rational &x) {
        j["value"] = to_string(x);
        j["approx"] = to_double(x);
        lines.push_back(exact_with_approx(x));
      };
      if (bound_kind == "gen") {
        need(bn, "--n"), need(br, "--r"), need(bc, "--c");
        emit_rational(bound_gen(bn, br, bc));
      } else if (bound_kind == "bb") {
        need(bn, "--n"), need(br, "--r");
        emit_rational(bound_bb(bn, br));
      } else if (bound_kind == "kst") {
        need(bk, "--k"), need(bc, "--c"), need(br, "--r");
        auto b = bound_kst(bk, bc, br);
        emit_rational(Rational(b.value));
        j["n"] = b.n;
        lines.push_back("n: " + std::to_string(b.n));
      } else if (bound_kind == "upper-bogd") {
        need(bk, "--k"), need(bc, "--c"), need(br, "--r");
        auto b = bound_upper_bogdnrv(bk, bc, br);
        emit_rational(b.value);
        j["n"] = b.n;
        lines.push_back("n: " + std::to_string(b.n));
      } else {
        need(bn, "--n"), need(br, "--r");
        auto b = bound_upper_erdos(bn, br);
        emit_rational(Rational(b.value));
        j["requires_large_n"] = b.requires_large_n;
        lines.push_back("note: holds only for n > n_0(r); n_0(r) is unknown");
      }
      if (json)
        out << j.dump() << '\n';
      else
        for (const auto &line : lines)
          out << line << '\n';
      return kExitOk;
    };
  });

  // gen
  auto *gen = app.add_subcommand("gen", "Graph generators (DIMACS output)");
  gen->require_subcommand(1);
  std::size_t gn = 0, gk = 0, levels = 2;
  std::string gp;
  std::uint64_t seed = 0;
  auto emit = [&](const Graph &g) {
    write_dimacs(out, g);
    return kExitOk;
  };
  auto *gcycle = gen->add_subcommand("cycle", "C_n");
  gcycle->add_option("n", gn)->required();
  gcycle->callback([&] { action = [&] { return emit(cycle(gn)); }; });
  auto *gcomplete = gen->add_subcommand("complete", "K_n");
  gcomplete->add_option("n", gn)->required();
  gcomplete->callback([&] { action = [&] { return emit(complete(gn)); }; });
  auto *gmyc1 = gen->add_subcommand("mycielski", "Mycielskian of a graph");
  gmyc1->add_option("file", file, "Base graph ('-' for stdin)")->required();
  gmyc1->callback(
      [&] { action = [&] { return emit(mycielski(load_graph(file))); }; });
  auto *gmyc = gen->add_subcommand("gmyc", "Generalized Mycielskian");
  gmyc->add_option("file", file, "Base graph ('-' for stdin)")->required();
  gmyc->add_option("-l,--levels", levels, "Number of layers")->check(
      CLI::PositiveNumber);
  gmyc->callback([&] {
    action = [&] { return emit(generalized_mycielski(load_graph(file), levels)); };
  });
  auto *gkneser = gen->add_subcommand("kneser", "Kneser graph K(n, k)");
  gkneser->add_option("n", gn)->required();
  gkneser->add_option("k", gk)->required();
  gkneser->callback([&] { action = [&] { return emit(kneser(gn, gk)); }; });
  auto *ggnp = gen->add_subcommand("gnp", "Erdős–Rényi G(n, p)");
  ggnp->add_option("n", gn)->required();
  ggnp->add_option("p", gp, "Edge probability, e.g. 1/4 or 0.25")->required();
  ggnp->add_option("seed", seed)->required();
  ggnp->callback([&] {
    action = [&] { return emit(gnp(gn, parse_rational(gp), seed)); };
  });

  // oracle
  std::uint64_t on = 0;
  std::size_t orr = 0, oc = 0, vmax = 0;
  std::string prune = "auto";
  auto *oracle = app.add_subcommand("oracle", "Exhaustive f_c(n, r) search");
  oracle->add_option("--n", on)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--r", orr)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--c", oc)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--vmax", vmax)->required()->check(CLI::Range(1, 8));
  oracle->add_option("--prune", prune, "auto | on | off");
  add_json(oracle);
  oracle->callback([&] {
    action = [&] {
      OracleResult res = f_oracle(on, orr, oc, vmax, parse_pruning(prune));
      const bool exact = res.mode == OracleResult::Mode::Exact;
      if (json) {
        Json j{{"mode", exact ? "EXACT" : "LOWER_BOUND"},
               {"value", res.value},
               {"graphs_examined", res.graphs_examined}};
        if (res.witness)
          j["witness"] = to_dimacs(*res.witness);
        out << j.dump() << '\n';
        return kExitOk;
      }
      if (exact) {
        out << "EXACT f=" << res.value
            << ", witness: " << describe(*res.witness) << '\n';
        write_dimacs(out, *res.witness);
      } else {
        out << "LOWER_BOUND f>=" << res.value << " (no witness on <= " << vmax
            << " vertices)\n";
      }
      out << "graphs examined: " << res.graphs_examined << '\n';
      return kExitOk;
    };
  });

  // verify-theorem
  std::uint64_t tn = 0, tr = 0, tc = 0;
  auto *vt = app.add_subcommand(
      "verify-theorem", "Check that carving depth meets the lower bound");
  vt->add_option("--n", tn)->required()->check(CLI::PositiveNumber);
  vt->add_option("--r", tr)->required()->check(CLI::PositiveNumber);
  vt->add_option("--c", tc)->required()->check(CLI::Range(2, 1 << 20));
  add_json(vt);
  vt->callback([&] {
    action = [&] {
      TheoremConsistencyReport rep = theorem_consistency(tn, tr, tc);
      if (json) {
        Json viol = Json::array();
        for (const auto &v : rep.violations)
          viol.push_back({{"v", v.v}, {"levels", v.levels}});
        out << Json{{"n", rep.n},
                    {"r", rep.r},
                    {"c", rep.c},
                    {"bound", to_string(rep.bound)},
                    {"v_max", rep.v_max},
                    {"min_slack", rep.min_slack},
                    {"max_slack", rep.max_slack},
                    {"violations", viol},
                    {"passed", rep.passed()}}
                   .dump()
            << '\n';
      } else {
        out << "bound: " << exact_with_approx(rep.bound) << '\n';
        out << "checked v: 1.." << rep.v_max << '\n';
        if (rep.v_max > 0)
          out << "slack n - c*t(v): min " << rep.min_slack << ", max "
              << rep.max_slack << '\n';
        for (const auto &v : rep.violations)
          out << "violation: v=" << v.v << " needs " << v.levels
              << " levels\n";
        out << (rep.passed() ? "pass" : "FAIL") << '\n';
      }
      return rep.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const LocalChromaticExceeded &e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace ballcarve::cli
