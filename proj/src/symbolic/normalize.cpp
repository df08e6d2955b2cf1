#include "heaplie/symbolic/normalize.hpp"

#include <unordered_map>

#include "heaplie/core.hpp"

namespace heaplie::symbolic {

namespace {

// Shared subtrees are normalised once, so deeply shared DAGs stay linear.
using Memo = std::unordered_map<const void*, FreeElement>;

FreeElement normalize_in(const Expr& e, Theory theory, Memo& memo) {
  if (e.kind() == Expr::Kind::var) return FreeElement::generator(theory, e.name());
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  FreeElement out(theory, {});
  switch (e.kind()) {
    case Expr::Kind::var:
      break;
    case Expr::Kind::heap: {
      std::vector<FreeElement> terms;
      terms.reserve(e.children().size());
      for (const auto& c : e.children()) terms.push_back(normalize_in(c, theory, memo));
      out = FreeElement::heap_word(terms);
      break;
    }
    case Expr::Kind::mul:
      if (theory != Theory::free_truss)
        throw Error(ErrorKind::malformed, "products are not part of the free heap theory: " + print(e));
      out = normalize_in(e.children()[0], theory, memo) * normalize_in(e.children()[1], theory, memo);
      break;
    case Expr::Kind::bracket:
      throw Error(ErrorKind::malformed, "bracket must be expanded before normalisation: " + print(e));
  }
  memo.emplace(e.id(), out);
  return out;
}

FreeElement normalize_in(const Expr& e, Theory theory) {
  Memo memo;
  return normalize_in(e, theory, memo);
}

}  // namespace

FreeElement normalize_free_heap(const Expr& e) { return normalize_in(e, Theory::free_heap); }

FreeElement normalize_free_truss(const Expr& e) { return normalize_in(e, Theory::free_truss); }

FreeElement normalize(const Expr& e, Theory theory) { return normalize_in(e, theory); }

Expr macro_bracket(const Expr& a, const Expr& b, const Expr& c) { return Expr::bracket(a, b, c); }

Expr expand_lie_macro(const Expr& e, MacroMode mode, const LieTernary* table) {
  if (mode == MacroMode::table) {
    require(table != nullptr, ErrorKind::malformed, "table mode needs a bracket table");
    return e;
  }
  switch (e.kind()) {
    case Expr::Kind::var:
      return e;
    case Expr::Kind::heap: {
      std::vector<Expr> terms;
      for (const auto& c : e.children()) terms.push_back(expand_lie_macro(c, mode));
      return Expr::heap(std::move(terms));
    }
    case Expr::Kind::mul:
      return Expr::mul(expand_lie_macro(e.children()[0], mode), expand_lie_macro(e.children()[1], mode));
    case Expr::Kind::bracket: {
      const Expr a = expand_lie_macro(e.children()[0], mode);
      const Expr b = expand_lie_macro(e.children()[1], mode);
      const Expr c = expand_lie_macro(e.children()[2], mode);
      return Expr::heap({Expr::mul(a, c), Expr::mul(c, a), b});
    }
  }
  return e;
}

Verdict prove_identity(const Expr& lhs, const Expr& rhs, Theory theory) {
  Expr l = lhs, r = rhs;
  if (theory == Theory::free_truss) {
    l = expand_lie_macro(lhs);
    r = expand_lie_macro(rhs);
  } else {
    for (const Expr* e : {&lhs, &rhs})
      if (e->contains(Expr::Kind::mul) || e->contains(Expr::Kind::bracket))
        throw Error(ErrorKind::malformed, "theory mismatch: free-heap identities cannot use products or brackets");
  }
  FreeElement ln = normalize(l, theory);
  FreeElement rn = normalize(r, theory);
  Coefficients diff = ln.coefficients();
  for (const auto& [w, c] : rn.coefficients()) diff[w] -= c;
  std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
  const bool equal = diff.empty();
  return Verdict{equal, std::move(ln), std::move(rn), std::move(diff)};
}

BracketBuilder strengthened_bracket(BracketBuilder inner, Expr o) {
  return [inner = std::move(inner), o = std::move(o)](const Expr& a, const Expr& b, const Expr& c) {
    return Expr::heap({inner(a, o, c), inner(a, o, o), o, inner(o, o, c), b});
  };
}

std::pair<Expr, Expr> nilpotency_identity(const BracketBuilder& br) {
  const auto a = Expr::var("a"), b = Expr::var("b");
  return {br(a, b, a), b};
}

std::pair<Expr, Expr> antisymmetry_identity(const BracketBuilder& br) {
  const auto a = Expr::var("a"), b = Expr::var("b"), c = Expr::var("c");
  return {Expr::heap({br(a, b, c), b, br(c, b, a)}), b};
}

std::pair<Expr, Expr> jacobi_identity(const BracketBuilder& br) {
  const auto a = Expr::var("a"), b = Expr::var("b"), c = Expr::var("c"), o = Expr::var("o");
  Expr lhs = br(br(a, o, b), o, c);
  Expr rhs = Expr::heap({br(o, o, a), br(br(b, o, c), o, a), br(o, o, b), br(br(c, o, a), o, b), br(o, o, c)});
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Expr, Expr> strong_jacobi_identity(const BracketBuilder& br) {
  const auto a = Expr::var("a"), b = Expr::var("b"), c = Expr::var("c"), d = Expr::var("d"), e = Expr::var("e");
  Expr lhs = br(br(a, d, b), e, c);
  Expr rhs = Expr::heap({br(d, e, a), br(br(b, d, c), e, a), br(d, e, b), br(br(c, d, a), e, b), br(d, e, c)});
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace heaplie::symbolic
