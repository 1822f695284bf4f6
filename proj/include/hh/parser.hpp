#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hh/rational_expr.hpp"

namespace hh {

// Error raised for malformed expression text; `position` is a 0-based offset
// into the input string pointing at the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses the expression grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ['^' signed-integer]
//   base   := rational-literal | identifier | 'i' | '(' expr ')'
// over the generator alphabet (w, z, x, y, a, b, lambda, eps, t).
RationalExpr parseExpr(std::string_view text);

}  // namespace hh
