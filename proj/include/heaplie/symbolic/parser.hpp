#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "heaplie/core.hpp"
#include "heaplie/symbolic/expr.hpp"

namespace heaplie::symbolic {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::malformed,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Grammar (whitespace insignificant):
///   expr  := prim { "*" prim }              products associate to the left
///   prim  := IDENT | "[" expr ("," expr)+ "]" | "{" expr "," expr "," expr "}" | "(" expr ")"
///   IDENT := letter { letter | digit | "_" }
/// Heap words must have odd arity >= 3.
Expr parse(std::string_view text);

/// Splits "LHS == RHS" and parses both sides.
std::pair<Expr, Expr> parse_identity(std::string_view text);

}  // namespace heaplie::symbolic
