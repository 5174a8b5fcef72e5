#include "ballcarve/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ballcarve/rational.hpp"

namespace ballcarve {

Decomposition carve(const Graph &g, std::size_t r) {
  if (r < 1)
    throw std::invalid_argument("carve radius must be at least 1");
  const std::size_t n = g.order();
  Decomposition d;
  d.r = r;
  d.v = n;
  d.separator = VertexSet(n);

  VertexSet residual = VertexSet::full(n);
  const BigInt v = n;

  // The lowest-index residual vertex is always the next center; residual
  // only shrinks, so an ascending scan visits them in order.
  for (Vertex u = 0; u < n; ++u) {
    if (!residual.contains(u))
      continue;

    // Layers of BFS from u inside the residual graph, depths 0..r+1.
    std::vector<std::vector<Vertex>> layers{{u}};
    VertexSet seen(n);
    seen.insert(u);
    for (std::size_t depth = 1; depth <= r + 1; ++depth) {
      std::vector<Vertex> next;
      for (Vertex x : layers.back())
        for (Vertex y : g.neighbors(x))
          if (residual.contains(y) && !seen.contains(y)) {
            seen.insert(y);
            next.push_back(y);
          }
      layers.push_back(std::move(next));
    }

    std::size_t m = 0;
    std::size_t inner = 1; // |U_{m-1}|
    for (std::size_t cand = 1; cand <= r + 1; ++cand) {
      std::size_t outer = inner + layers[cand].size(); // |U_m|
      if (ipow(outer, r + 1) <= v * ipow(inner, r + 1)) {
        m = cand;
        break;
      }
      inner = outer;
    }
    // The ratios telescope to |U_{r+1}| <= v, so one of them is small.
    if (m == 0)
      throw std::logic_error("no admissible carving radius");

    Part part{u, m, VertexSet(n)};
    for (std::size_t depth = 0; depth < m; ++depth)
      for (Vertex x : layers[depth]) {
        part.vertices.insert(x);
        residual.erase(x);
      }
    for (Vertex x : layers[m]) {
      d.separator.insert(x);
      residual.erase(x);
    }
    d.parts.push_back(std::move(part));
  }
  return d;
}

bool DecompositionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.passed; });
}

bool separator_bound_holds(std::size_t v, std::size_t separator,
                           std::size_t r) {
  if (separator > v)
    return false;
  return ipow(BigInt(v - separator), r + 1) >= ipow(BigInt(v), r);
}

DecompositionReport verify_decomposition(const Graph &g, std::size_t r,
                                         const Decomposition &d) {
  const std::size_t n = g.order();
  DecompositionReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  bool shapes_ok = d.separator.universe() == n;
  for (const Part &p : d.parts)
    shapes_ok = shapes_ok && p.vertices.universe() == n && p.center < n;
  if (!shapes_ok) {
    const std::string why = "decomposition does not match graph order " +
                            std::to_string(n);
    for (const char *name : {"cover", "separation", "radius",
                             "separator_bound", "connectivity"})
      add(name, false, why);
    return report;
  }

  {
    VertexSet covered = d.separator;
    std::string detail;
    for (std::size_t i = 0; i < d.parts.size() && detail.empty(); ++i) {
      const VertexSet &part = d.parts[i].vertices;
      if (part.empty())
        detail = "part " + std::to_string(i) + " is empty";
      else if (part.intersects(covered))
        detail = "part " + std::to_string(i) + " overlaps another part or N";
      covered |= part;
    }
    if (detail.empty() && covered.size() != n)
      detail = std::to_string(n - covered.size()) + " vertices uncovered";
    add("cover", detail.empty(), detail);
  }

  {
    std::string detail;
    for (std::size_t i = 0; i < d.parts.size() && detail.empty(); ++i) {
      VertexSet leak = outer_boundary(g, d.parts[i].vertices) - d.separator;
      if (!leak.empty())
        detail = "part " + std::to_string(i) + " is adjacent to vertex " +
                 std::to_string(leak.members().front()) + " outside N";
    }
    add("separation", detail.empty(), detail);
  }

  {
    std::string detail;
    for (std::size_t i = 0; i < d.parts.size() && detail.empty(); ++i) {
      const Part &p = d.parts[i];
      if (!p.vertices.is_subset_of(ball(g, p.center, r)))
        detail = "part " + std::to_string(i) + " leaves the radius-" +
                 std::to_string(r) + " ball around " + std::to_string(p.center);
    }
    add("radius", detail.empty(), detail);
  }

  {
    const std::size_t sep = d.separator.size();
    bool ok = separator_bound_holds(n, sep, r);
    add("separator_bound", ok,
        ok ? "" : "(" + std::to_string(n) + " - " + std::to_string(sep) +
                      ")^" + std::to_string(r + 1) + " < " +
                      std::to_string(n) + "^" + std::to_string(r));
  }

  {
    std::string detail;
    for (std::size_t i = 0; i < d.parts.size() && detail.empty(); ++i)
      if (!is_connected(induced(g, d.parts[i].vertices).graph))
        detail = "part " + std::to_string(i) + " is disconnected";
    add("connectivity", detail.empty(), detail);
  }
  return report;
}

std::uint64_t min_part_mass(std::uint64_t v, std::size_t r) {
  if (v == 0)
    return 0;
  const BigInt target = ipow(BigInt(v), r);
  const double estimate =
      std::pow(static_cast<double>(v), static_cast<double>(r) / (r + 1));
  std::uint64_t s = estimate > 2.0 ? static_cast<std::uint64_t>(estimate) - 2 : 0;
  while (ipow(BigInt(s), r + 1) < target)
    ++s;
  while (s > 0 && ipow(BigInt(s - 1), r + 1) >= target)
    --s;
  return s;
}

std::size_t level_bound(std::uint64_t v, std::size_t r) {
  if (r < 1)
    throw std::invalid_argument("level_bound radius must be at least 1");
  std::size_t levels = 0;
  while (v > 0) {
    v -= min_part_mass(v, r);
    ++levels;
  }
  return levels;
}

LocalChromaticExceeded::LocalChromaticExceeded(Vertex center,
                                               std::size_t level,
                                               std::size_t c)
    : std::runtime_error("local chromatic number exceeds " + std::to_string(c) +
                         " at center " + std::to_string(center) +
                         " (level " + std::to_string(level) + ")"),
      center_(center), level_(level) {}

RecursiveColoringReport recursive_color(const Graph &g, std::size_t r,
                                        std::size_t c) {
  if (c < 1)
    throw std::invalid_argument("palette size c must be at least 1");
  const std::size_t n = g.order();
  std::vector<Color> colors(n, 0);
  RecursiveColoringReport report;

  VertexSet current = VertexSet::full(n);
  for (std::size_t level = 0; !current.empty(); ++level) {
    SubgraphView sub = induced(g, current);
    Decomposition d = carve(sub.graph, r);
    for (const Part &part : d.parts) {
      SubgraphView piece = induced(sub.graph, part.vertices);
      auto local = k_coloring(piece.graph, c);
      if (!local)
        throw LocalChromaticExceeded(sub.to_parent[part.center], level, c);
      for (Vertex i = 0; i < piece.to_parent.size(); ++i)
        colors[sub.to_parent[piece.to_parent[i]]] =
            static_cast<Color>(level * c + local->colors[i]);
    }
    report.level_sizes.push_back(current.size());
    current = sub.lift(d.separator);
  }
  report.levels = report.level_sizes.size();
  report.coloring = Coloring::from_colors(std::move(colors));
  return report;
}

std::string to_json(const Decomposition &d) {
  nlohmann::ordered_json j;
  j["r"] = d.r;
  j["v"] = d.v;
  j["parts"] = nlohmann::ordered_json::array();
  for (const Part &p : d.parts) {
    nlohmann::ordered_json part;
    part["center"] = p.center;
    part["m"] = p.m;
    part["vertices"] = p.vertices.members();
    j["parts"].push_back(std::move(part));
  }
  j["separator"] = d.separator.members();
  return j.dump(2);
}

Decomposition decomposition_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("decomposition JSON: ") + e.what());
  }
  auto members = [](const nlohmann::json &arr, std::size_t n) {
    VertexSet s(n);
    for (auto x : arr.get<std::vector<std::uint64_t>>()) {
      if (x >= n)
        throw std::invalid_argument("decomposition JSON: vertex " +
                                    std::to_string(x) + " out of range");
      s.insert(static_cast<Vertex>(x));
    }
    return s;
  };
  try {
    Decomposition d;
    d.r = j.at("r").get<std::size_t>();
    d.v = j.at("v").get<std::size_t>();
    for (const auto &p : j.at("parts"))
      d.parts.push_back(Part{p.at("center").get<Vertex>(),
                             p.at("m").get<std::size_t>(),
                             members(p.at("vertices"), d.v)});
    d.separator = members(j.at("separator"), d.v);
    return d;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("decomposition JSON: ") + e.what());
  }
}

} // namespace ballcarve
