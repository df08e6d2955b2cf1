#include "heaplie/symbolic/parser.hpp"

#include <cctype>
#include <vector>

namespace heaplie::symbolic {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text, std::size_t offset = 0) : text_(text), pos_(offset) {}

  Expr parse_all(std::size_t end) {
    end_ = end;
    Expr e = expr();
    skip_ws();
    if (pos_ < end_) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  Expr expr() {
    Expr acc = prim();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = Expr::mul(std::move(acc), prim());
    }
  }

  Expr prim() {
    skip_ws();
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) return ident();
    if (c == '[') {
      const std::size_t open = pos_++;
      std::vector<Expr> terms{expr()};
      while (accept(',')) terms.push_back(expr());
      expect(']', open);
      if (terms.size() < 3 || terms.size() % 2 == 0)
        fail_at(open, "heap word has arity " + std::to_string(terms.size()) + "; arity must be odd and >= 3");
      return Expr::heap(std::move(terms));
    }
    if (c == '{') {
      const std::size_t open = pos_++;
      Expr a = expr();
      expect(',', open);
      Expr b = expr();
      expect(',', open);
      Expr d = expr();
      expect('}', open);
      return Expr::bracket(std::move(a), std::move(b), std::move(d));
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      Expr e = expr();
      expect(')', open);
      return e;
    }
    if (pos_ >= end_) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr ident() {
    const std::size_t start = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return Expr::var(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, std::size_t open) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return;
    }
    if (pos_ >= end_) fail_at(open, "unbalanced '" + std::string(1, text_[open]) + "'");
    fail("expected '" + std::string(1, c) + "'");
  }

  char peek() const { return pos_ < end_ ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(text.size()); }

std::pair<Expr, Expr> parse_identity(std::string_view text) {
  const auto at = text.find("==");
  if (at == std::string_view::npos) throw ParseError("identity needs 'LHS == RHS'", 1, 1);
  if (const auto again = text.find("==", at + 2); again != std::string_view::npos)
    throw ParseError("identity contains more than one '=='", 1, static_cast<int>(again) + 1);
  Expr lhs = Parser(text).parse_all(at);
  Expr rhs = Parser(text, at + 2).parse_all(text.size());
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace heaplie::symbolic
