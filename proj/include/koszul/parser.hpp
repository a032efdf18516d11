#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/trunc_poly.hpp"

namespace koszul {

// Syntax or semantic error in user-supplied text; position is a 0-based
// byte offset into the offending string.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Grammar:
//   expression := ['-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := integer | variable | variable '^' integer | '(' expression ')'
// No implicit multiplication. Integer literals reduce mod p; the result is
// truncated at degree `bound`.
TruncPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, PrimeField f,
                     unsigned bound);

}  // namespace koszul
