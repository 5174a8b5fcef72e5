#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ballcarve/chromatic.hpp"
#include "ballcarve/graph.hpp"

namespace ballcarve {

/// One carved part: the ball U_{m-1}(center) of the residual graph at the
/// moment it was removed.
struct Part {
  Vertex center = 0;
  std::size_t m = 1;
  VertexSet vertices;
};

/// V = U_1 ⊔ ... ⊔ U_s ⊔ N produced by ball carving with radius r.
struct Decomposition {
  std::size_t r = 1;
  std::size_t v = 0; // vertex count of the carved graph
  std::vector<Part> parts;
  VertexSet separator;
};

/// Ball carving. Repeatedly takes the lowest-index residual vertex u and
/// the smallest m in 1..r+1 with |U_m|^(r+1) <= v * |U_{m-1}|^(r+1) (balls
/// taken in the residual graph), emits U_{m-1} as a part, moves the sphere
/// S_m into the separator and deletes U_m from the residual graph.
///
/// Every part lies in a radius-(m-1) ball, touches no other part, and the
/// separator satisfies (v - |N|)^(r+1) >= v^r. Throws std::invalid_argument
/// when r < 1.
Decomposition carve(const Graph &g, std::size_t r);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DecompositionReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Independent re-check of a decomposition against g. Check names:
/// "cover", "separation", "radius", "separator_bound", "connectivity".
DecompositionReport verify_decomposition(const Graph &g, std::size_t r,
                                         const Decomposition &d);

/// Exact separator bound (v - separator)^(r+1) >= v^r.
bool separator_bound_holds(std::size_t v, std::size_t separator,
                           std::size_t r);

/// Smallest s with s^(r+1) >= v^r.
std::uint64_t min_part_mass(std::uint64_t v, std::size_t r);

/// Worst-case carving depth: t(0) = 0, t(v) = 1 + t(v - min_part_mass(v, r)).
std::size_t level_bound(std::uint64_t v, std::size_t r);

class LocalChromaticExceeded : public std::runtime_error {
public:
  LocalChromaticExceeded(Vertex center, std::size_t level, std::size_t c);
  Vertex center() const { return center_; }
  std::size_t level() const { return level_; }

private:
  Vertex center_;
  std::size_t level_;
};

struct RecursiveColoringReport {
  Coloring coloring;
  std::size_t levels = 0;
  std::vector<std::size_t> level_sizes; // vertices handled per level
};

/// Colors g level by level: carve the current graph, color every part with
/// its own copy of the level palette {l*c, ..., l*c + c - 1}, then recurse on
/// the separator. Throws LocalChromaticExceeded when a part is not
/// c-colorable, which certifies that the radius-r local chromatic number of
/// g exceeds c.
RecursiveColoringReport recursive_color(const Graph &g, std::size_t r,
                                        std::size_t c);

/// JSON text {"r", "v", "parts": [{"center", "m", "vertices"}], "separator"}.
std::string to_json(const Decomposition &d);
Decomposition decomposition_from_json(std::string_view text);

} // namespace ballcarve
