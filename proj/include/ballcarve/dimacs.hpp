#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ballcarve/graph.hpp"

namespace ballcarve {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Reads a DIMACS .col graph ("p edge n m", "e u v", "c ..." lines).
/// Vertices are 1-based in the file and 0-based in the result. Duplicate
/// edges collapse; self-loops and out-of-range vertices throw ParseError.
Graph parse_dimacs(std::istream &in);
Graph parse_dimacs(std::string_view text);
Graph read_dimacs_file(const std::string &path);

/// Canonical DIMACS text: header, then "e u v" with u < v in ascending order.
std::string to_dimacs(const Graph &g);
void write_dimacs(std::ostream &out, const Graph &g);

} // namespace ballcarve
