#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace heaplie::symbolic {

/// Immutable expression tree: variables, odd heap words [x1,...,x2k+1],
/// binary products x*y and ternary brackets {a,b,c}.
class Expr {
 public:
  enum class Kind { var, heap, mul, bracket };

  static Expr var(std::string name);
  /// Throws Error(malformed) unless the arity is odd and >= 3.
  static Expr heap(std::vector<Expr> terms);
  static Expr mul(Expr left, Expr right);
  static Expr bracket(Expr a, Expr b, Expr c);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Expr>& children() const noexcept { return node_->children; }
  /// Identity of the shared node; equal for copies of the same subtree.
  const void* id() const noexcept { return node_.get(); }

  bool contains(Kind k) const;
  std::set<std::string> variables() const;
  std::size_t depth() const;

  bool operator==(const Expr& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical text form; parse(print(e)) == e.
std::string print(const Expr& e);

/// Replaces each variable by the corresponding expression (unlisted names stay).
Expr substitute(const Expr& e, const std::vector<std::pair<std::string, Expr>>& bindings);

}  // namespace heaplie::symbolic
