#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dratio/multipoly.hpp"

namespace dratio {

/// Syntax or name error while reading a polynomial; position is a 0-based
/// offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := integer | integer '/' positive-integer | variable | '(' expr ')'
/// Whitespace is ignored. Multiplication is always explicit: "2x" is an error.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> variables);

/// Split "a, b, c" on top-level commas (parentheses respected).
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace dratio
