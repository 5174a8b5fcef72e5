#include "ballcarve/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace ballcarve {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_count(std::string_view tok, std::size_t lineno,
                     const char *what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, std::string("invalid ") + what + " '" +
                                 std::string(tok) + "'");
  return value;
}

} // namespace

Graph parse_dimacs(std::istream &in) {
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c")
      continue;
    if (tokens[0] == "p") {
      if (n)
        throw ParseError(lineno, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        throw ParseError(lineno, "malformed header, expected 'p edge n m'");
      n = to_count(tokens[2], lineno, "vertex count");
      to_count(tokens[3], lineno, "edge count");
      continue;
    }
    if (tokens[0] == "e") {
      if (!n)
        throw ParseError(lineno, "edge line before 'p edge' header");
      if (tokens.size() != 3)
        throw ParseError(lineno, "malformed edge line, expected 'e u v'");
      std::size_t u = to_count(tokens[1], lineno, "vertex");
      std::size_t v = to_count(tokens[2], lineno, "vertex");
      if (u < 1 || u > *n || v < 1 || v > *n)
        throw ParseError(lineno, "vertex index out of range 1.." +
                                     std::to_string(*n));
      if (u == v)
        throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1),
                         static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tokens[0]) +
                                 "'");
  }
  if (!n)
    throw ParseError(lineno, "missing 'p edge n m' header");
  return Graph(*n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

Graph read_dimacs_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void write_dimacs(std::ostream &out, const Graph &g) {
  out << "p edge " << g.order() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges())
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph &g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

} // namespace ballcarve
