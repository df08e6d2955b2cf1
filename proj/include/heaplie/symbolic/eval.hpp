#pragma once

#include <map>
#include <optional>
#include <string>

#include "heaplie/lie.hpp"
#include "heaplie/symbolic/expr.hpp"
#include "heaplie/symbolic/free_element.hpp"
#include "heaplie/truss.hpp"

namespace heaplie::symbolic {

using Assignment = std::map<std::string, Elem>;

/// Direct evaluation in a truss; {a,b,c} is read as [ac, ca, b].
/// Unbound variables raise Error(malformed).
Elem evaluate(const Expr& e, const TrussStructure& t, const Assignment& env);

/// Evaluation in a bare heap; products and brackets raise Error(malformed).
Elem evaluate(const Expr& e, const FiniteHeap& h, const Assignment& env);

/// Evaluation with brackets taken from a table; products raise Error(malformed).
Elem evaluate(const Expr& e, const LieTernary& l, const Assignment& env);

/// Value of a normal form: the affine combination of its words, each word
/// evaluated as a left-to-right product.
Elem evaluate(const FreeElement& f, const TrussStructure& t, const Assignment& env);
Elem evaluate(const FreeElement& f, const FiniteHeap& h, const Assignment& env);

}  // namespace heaplie::symbolic
