#pragma once

// Map and pair files.
//
//   # comment
//   n = 2
//   vars = x, y
//   f = (x^3 + y, x + y^2)          affine components
//   F = [X^2, Y*Z, Z^2]             or homogeneous forms in X, Y, Z
//
// A pair file holds two map lines (f or F) plus optional r1 = ..., r2 = ...
// with values "p/q" or "inf".

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dratio/projmap.hpp"

namespace dratio {

class MapFileError : public std::runtime_error {
 public:
  MapFileError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct MapSpec {
  std::size_t n = 0;
  std::vector<std::string> vars;
  ProjMap map;
};

struct PairSpec {
  MapSpec f1, f2;
  std::optional<ExtRational> r1, r2;
};

MapSpec parse_map_text(const std::string& text);
PairSpec parse_pair_text(const std::string& text);
MapSpec load_map_file(const std::string& path);
PairSpec load_pair_file(const std::string& path);

}  // namespace dratio
