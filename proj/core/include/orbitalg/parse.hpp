#pragma once

#include "orbitalg/polynomial.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitalg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  // Zero-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | name ['^' integer]
// Throws ParseError on syntax errors, unknown names and zero denominators.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);

}  // namespace orbitalg
