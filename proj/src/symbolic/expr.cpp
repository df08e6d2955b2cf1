#include "heaplie/symbolic/expr.hpp"

#include <algorithm>

#include "heaplie/core.hpp"

namespace heaplie::symbolic {

Expr Expr::var(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::var, std::move(name), {}}));
}

Expr Expr::heap(std::vector<Expr> terms) {
  require(terms.size() >= 3 && terms.size() % 2 == 1, ErrorKind::malformed,
          "heap words need an odd number (>= 3) of terms");
  return Expr(std::make_shared<const Node>(Node{Kind::heap, {}, std::move(terms)}));
}

Expr Expr::mul(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(Node{Kind::mul, {}, {std::move(left), std::move(right)}}));
}

Expr Expr::bracket(Expr a, Expr b, Expr c) {
  return Expr(std::make_shared<const Node>(Node{Kind::bracket, {}, {std::move(a), std::move(b), std::move(c)}}));
}

bool Expr::contains(Kind k) const {
  if (kind() == k) return true;
  return std::any_of(children().begin(), children().end(), [k](const Expr& c) { return c.contains(k); });
}

std::set<std::string> Expr::variables() const {
  std::set<std::string> out;
  if (kind() == Kind::var) {
    out.insert(name());
    return out;
  }
  for (const auto& c : children()) out.merge(c.variables());
  return out;
}

std::size_t Expr::depth() const {
  std::size_t d = 0;
  for (const auto& c : children()) d = std::max(d, c.depth());
  return d + 1;
}

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name() || children().size() != other.children().size())
    return false;
  for (std::size_t i = 0; i < children().size(); ++i)
    if (!(children()[i] == other.children()[i])) return false;
  return true;
}

namespace {

void print_to(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::var:
      out += e.name();
      return;
    case Expr::Kind::heap:
    case Expr::Kind::bracket: {
      const bool heap = e.kind() == Expr::Kind::heap;
      out += heap ? '[' : '{';
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ", ";
        print_to(e.children()[i], out);
      }
      out += heap ? ']' : '}';
      return;
    }
    case Expr::Kind::mul: {
      // products associate to the left, so only a right-hand product needs parentheses
      print_to(e.children()[0], out);
      out += '*';
      const auto& r = e.children()[1];
      if (r.kind() == Expr::Kind::mul) {
        out += '(';
        print_to(r, out);
        out += ')';
      } else {
        print_to(r, out);
      }
      return;
    }
  }
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

Expr substitute(const Expr& e, const std::vector<std::pair<std::string, Expr>>& bindings) {
  switch (e.kind()) {
    case Expr::Kind::var:
      for (const auto& [name, value] : bindings)
        if (name == e.name()) return value;
      return e;
    case Expr::Kind::heap: {
      std::vector<Expr> terms;
      for (const auto& c : e.children()) terms.push_back(substitute(c, bindings));
      return Expr::heap(std::move(terms));
    }
    case Expr::Kind::mul:
      return Expr::mul(substitute(e.children()[0], bindings), substitute(e.children()[1], bindings));
    case Expr::Kind::bracket:
      return Expr::bracket(substitute(e.children()[0], bindings), substitute(e.children()[1], bindings),
                           substitute(e.children()[2], bindings));
  }
  return e;
}

}  // namespace heaplie::symbolic
