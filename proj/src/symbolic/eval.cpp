#include "heaplie/symbolic/eval.hpp"

#include "heaplie/core.hpp"

namespace heaplie::symbolic {

namespace {

Elem lookup(const Assignment& env, const std::string& name) {
  const auto it = env.find(name);
  if (it == env.end()) throw Error(ErrorKind::malformed, "no value for variable '" + name + "'");
  return it->second;
}

// Shared walker; `mul` and `bracket` decide what the model offers.
template <class Mul, class Bracket>
Elem walk(const Expr& e, const FiniteHeap& h, const Assignment& env, const Mul& mul, const Bracket& bracket) {
  switch (e.kind()) {
    case Expr::Kind::var:
      return lookup(env, e.name());
    case Expr::Kind::heap: {
      std::vector<Elem> word;
      word.reserve(e.children().size());
      for (const auto& c : e.children()) word.push_back(walk(c, h, env, mul, bracket));
      return eval_word(h, word);
    }
    case Expr::Kind::mul:
      return mul(walk(e.children()[0], h, env, mul, bracket), walk(e.children()[1], h, env, mul, bracket));
    case Expr::Kind::bracket:
      return bracket(walk(e.children()[0], h, env, mul, bracket), walk(e.children()[1], h, env, mul, bracket),
                     walk(e.children()[2], h, env, mul, bracket));
  }
  throw Error(ErrorKind::malformed, "unknown expression node");
}

[[noreturn]] Elem no_mul(Elem, Elem) { throw Error(ErrorKind::malformed, "the model has no multiplication"); }
[[noreturn]] Elem no_bracket(Elem, Elem, Elem) { throw Error(ErrorKind::malformed, "the model has no bracket"); }

template <class WordValue>
Elem combine(const FreeElement& f, const AbelianGroup& g, const WordValue& value) {
  require(f.coefficient_sum() == 1, ErrorKind::malformed, "normal form must have coefficient sum one");
  const Integer order = static_cast<unsigned long long>(g.order());
  Elem acc = g.zero();
  for (const auto& [w, c] : f.coefficients()) {
    Integer r = c % order;
    if (r < 0) r += order;
    acc = g.add(acc, g.times(value(w), r.convert_to<long long>()));
  }
  return acc;
}

}  // namespace

Elem evaluate(const Expr& e, const TrussStructure& t, const Assignment& env) {
  const auto mul = [&](Elem a, Elem b) { return t.multiply(a, b); };
  const auto br = [&](Elem a, Elem b, Elem c) { return t.heap.op(t.multiply(a, c), t.multiply(c, a), b); };
  return walk(e, t.heap, env, mul, br);
}

Elem evaluate(const Expr& e, const FiniteHeap& h, const Assignment& env) {
  return walk(e, h, env, no_mul, no_bracket);
}

Elem evaluate(const Expr& e, const LieTernary& l, const Assignment& env) {
  return walk(e, l.heap, env, no_mul, [&](Elem a, Elem b, Elem c) { return l(a, b, c); });
}

Elem evaluate(const FreeElement& f, const TrussStructure& t, const Assignment& env) {
  return combine(f, t.heap.group(), [&](const Word& w) {
    Elem v = lookup(env, w.front());
    for (std::size_t i = 1; i < w.size(); ++i) v = t.multiply(v, lookup(env, w[i]));
    return v;
  });
}

Elem evaluate(const FreeElement& f, const FiniteHeap& h, const Assignment& env) {
  return combine(f, h.group(), [&](const Word& w) {
    require(w.size() == 1, ErrorKind::malformed, "the model has no multiplication");
    return lookup(env, w.front());
  });
}

}  // namespace heaplie::symbolic
