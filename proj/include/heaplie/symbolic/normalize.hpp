#pragma once

#include <functional>
#include <utility>

#include "heaplie/symbolic/expr.hpp"
#include "heaplie/symbolic/free_element.hpp"

namespace heaplie {
struct LieTernary;
}

namespace heaplie::symbolic {

/// Normal form in the free abelian heap; Mul or bracket nodes raise Error(malformed).
FreeElement normalize_free_heap(const Expr& e);

/// Normal form in the free truss (integer combinations of words, coefficient sum one).
/// Bracket nodes must be expanded first.
FreeElement normalize_free_truss(const Expr& e);

FreeElement normalize(const Expr& e, Theory theory);

enum class MacroMode {
  truss_commutator,  // {a,b,c} -> [a*c, c*a, b]
  table,             // brackets stay and are read from an attached bracket table
};

/// Rewrites bracket nodes innermost-first. Table mode requires `table` and
/// returns the expression unchanged for evaluation against it.
Expr expand_lie_macro(const Expr& e, MacroMode mode = MacroMode::truss_commutator, const LieTernary* table = nullptr);

struct Verdict {
  bool equal = false;
  FreeElement lhs_nf;
  FreeElement rhs_nf;
  Coefficients diff;  // lhs - rhs
};

/// Decides lhs == rhs in the free theory. In the free truss, brackets are
/// expanded with the commutator macro first. Raises Error(malformed) when an
/// expression uses operations outside the theory.
Verdict prove_identity(const Expr& lhs, const Expr& rhs, Theory theory);

/// Builders for the bracket identities, parameterised by how a bracket is formed.
using BracketBuilder = std::function<Expr(const Expr&, const Expr&, const Expr&)>;

Expr macro_bracket(const Expr& a, const Expr& b, const Expr& c);

/// {a,b,c}_o = [{a,o,c}, {a,o,o}, o, {o,o,c}, b] over the given bracket.
BracketBuilder strengthened_bracket(BracketBuilder inner, Expr o);

std::pair<Expr, Expr> nilpotency_identity(const BracketBuilder& br);     // {a,b,a} == b
std::pair<Expr, Expr> antisymmetry_identity(const BracketBuilder& br);   // [{a,b,c}, b, {c,b,a}] == b
std::pair<Expr, Expr> jacobi_identity(const BracketBuilder& br);         // variables a, b, c, o
std::pair<Expr, Expr> strong_jacobi_identity(const BracketBuilder& br);  // variables a, b, c, d, e

}  // namespace heaplie::symbolic
