#include "heaplie/lie.hpp"

#include <array>
#include <map>
#include <string>

namespace heaplie {

namespace {

void check_ternary_shape(std::size_t n, const std::vector<Elem>& bracket) {
  require(bracket.size() == n * n * n, ErrorKind::malformed,
          "bracket table has " + std::to_string(bracket.size()) + " entries, expected n^3 = " +
              std::to_string(n * n * n));
  for (Elem v : bracket) require(v < n, ErrorKind::malformed, "bracket entry out of range");
}

// Both sides of the five-variable identity; the four-variable one is d = e = o.
std::pair<Elem, Elem> strong_sides(const LieTernary& l, Elem a, Elem b, Elem c, Elem d, Elem e) {
  const Elem lhs = l(l(a, d, b), e, c);
  const std::array<Elem, 5> word{l(d, e, a), l(l(b, d, c), e, a), l(d, e, b), l(l(c, d, a), e, b), l(d, e, c)};
  return {lhs, eval_word(l.heap, word)};
}

}  // namespace

LieTernary LieTernary::make(FiniteHeap heap, std::vector<Elem> bracket) {
  check_ternary_shape(heap.size(), bracket);
  return LieTernary{std::move(heap), std::nullopt, std::move(bracket)};
}

LieTernary LieTernary::make(AffineStructure affine, std::vector<Elem> bracket) {
  check_ternary_shape(affine.size(), bracket);
  FiniteHeap h = affine.heap;
  return LieTernary{std::move(h), std::move(affine), std::move(bracket)};
}

ViolationReport validate_lie_truss(const LieTernary& l, const SweepOptions& opt) {
  const std::size_t n = l.size();
  check_ternary_shape(n, l.bracket);
  const auto& H = l.heap;
  const auto& G = H.group();
  const Elem z = G.zero();
  ReportBuilder rb(opt);

  // Slot maps are heap morphisms iff f(x + y) = [f(x), f(0), f(y)] in the base group.
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < n; ++x)
        for (Elem y = x; y < n; ++y) {
          const Elem w = G.add(x, y);
          Elem lhs = l(w, a, b), rhs = H.op(l(x, a, b), l(z, a, b), l(y, a, b));
          if (lhs != rhs && s.add({"slot1.hom", {x, z, y, a, b}, lhs, rhs})) return;
          lhs = l(a, w, b), rhs = H.op(l(a, x, b), l(a, z, b), l(a, y, b));
          if (lhs != rhs && s.add({"slot2.hom", {a, x, z, y, b}, lhs, rhs})) return;
          lhs = l(a, b, w), rhs = H.op(l(a, b, x), l(a, b, z), l(a, b, y));
          if (lhs != rhs && s.add({"slot3.hom", {a, b, x, z, y}, lhs, rhs})) return;
        }
  });
  if (l.affine) {
    const auto& S = *l.affine;
    const auto P = static_cast<std::size_t>(S.field.p());
    rb.run(P * n, [&](Elem lead, WitnessSink& s) {
      const int al = int(lead / n);
      const Elem a = Elem(lead % n);
      for (Elem b = 0; b < n; ++b)
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) {
            const Elem w = S.act(al, x, y);
            Elem lhs = l(w, a, b), rhs = S.act(al, l(x, a, b), l(y, a, b));
            if (lhs != rhs && s.add({"slot1.aff", {Elem(al), x, y, a, b}, lhs, rhs})) return;
            lhs = l(a, w, b), rhs = S.act(al, l(a, x, b), l(a, y, b));
            if (lhs != rhs && s.add({"slot2.aff", {Elem(al), a, x, y, b}, lhs, rhs})) return;
            lhs = l(a, b, w), rhs = S.act(al, l(a, b, x), l(a, b, y));
            if (lhs != rhs && s.add({"slot3.aff", {Elem(al), a, b, x, y}, lhs, rhs})) return;
          }
    });
  }
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      if (l(a, b, a) != b && s.add({"aa", {a, b}, l(a, b, a), b})) return;
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = H.op(l(a, b, c), b, l(c, b, a));
        if (lhs != b && s.add({"as", {a, b, c}, lhs, b})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem o = 0; o < n; ++o) {
          const auto [lhs, rhs] = strong_sides(l, a, b, c, o, o);
          if (lhs != rhs && s.add({"Jacobi", {a, b, c, o}, lhs, rhs})) return;
        }
  });
  return rb.take();
}

ViolationReport validate_strong_jacobi(const LieTernary& l, const SweepOptions& opt) {
  const std::size_t n = l.size();
  check_ternary_shape(n, l.bracket);
  require(n <= kMaxQuinticSweep, ErrorKind::budget,
          "strong Jacobi sweep limited to " + std::to_string(kMaxQuinticSweep) + " points");
  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d)
          for (Elem e = 0; e < n; ++e) {
            const auto [lhs, rhs] = strong_sides(l, a, b, c, d, e);
            if (lhs != rhs && s.add({"Jacobi.s", {a, b, c, d, e}, lhs, rhs})) return;
          }
  });
  return rb.take();
}

LieTernary bracket_from_truss(const TrussStructure& t) {
  const std::size_t n = t.size();
  std::vector<Elem> br(n * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) br[(a * n + b) * n + c] = t.heap.op(t.multiply(a, c), t.multiply(c, a), b);
  return LieTernary{t.heap, std::nullopt, std::move(br)};
}

DerivationLieTruss derivations_lie_truss(const TrussStructure& t, std::vector<ElementMap> derivations) {
  const std::size_t k = derivations.size();
  const std::size_t n = t.size();
  require(k >= 1, ErrorKind::malformed, "derivation set is empty");
  require(k <= kMaxGroupOrder, ErrorKind::budget, "too many derivations for a finite carrier");
  std::map<ElementMap, Elem> index;
  for (Elem i = 0; i < k; ++i) {
    require(derivations[i].size() == n, ErrorKind::malformed, "derivation length does not match the carrier");
    index.emplace(derivations[i], i);
  }
  require(index.size() == k, ErrorKind::malformed, "derivation list has duplicates");

  auto lookup = [&](const ElementMap& m, const char* what) {
    auto it = index.find(m);
    if (it == index.end()) throw Error(ErrorKind::invalid, std::string("derivations not closed under ") + what);
    return it->second;
  };

  ElementMap tmp(n);
  std::vector<Elem> heap_op(k * k * k), bracket(k * k * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      for (Elem l = 0; l < k; ++l) {
        const auto &d1 = derivations[i], &d2 = derivations[j], &d3 = derivations[l];
        for (Elem x = 0; x < n; ++x) tmp[x] = t.heap.op(d1[x], d2[x], d3[x]);
        heap_op[(i * k + j) * k + l] = lookup(tmp, "the pointwise heap operation");
        for (Elem x = 0; x < n; ++x) tmp[x] = t.heap.op(d1[d3[x]], d3[d1[x]], d2[x]);
        bracket[(i * k + j) * k + l] = lookup(tmp, "the commutator bracket");
      }

  std::vector<Elem> add(k * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) add[i * k + j] = heap_op[(i * k + 0) * k + j];
  FiniteHeap heap = heap_from_group(AbelianGroup::from_table(k, std::move(add), 0));
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      for (Elem l = 0; l < k; ++l)
        if (heap.op(i, j, l) != heap_op[(i * k + j) * k + l])
          throw Error(ErrorKind::invalid, "pointwise operation on derivations is not an abelian heap");
  return DerivationLieTruss{std::move(derivations), LieTernary{std::move(heap), std::nullopt, std::move(bracket)}};
}

LieAffebra LieAffebra::make(AffineStructure affine, Elem origin, std::vector<Elem> bracket) {
  const std::size_t n = affine.size();
  require(origin < n, ErrorKind::malformed, "origin out of range");
  require(bracket.size() == n * n, ErrorKind::malformed, "binary bracket must have n*n entries");
  for (Elem v : bracket) require(v < n, ErrorKind::malformed, "bracket entry out of range");
  return LieAffebra{std::move(affine), origin, std::move(bracket)};
}

ViolationReport validate_lie_affebra(const LieAffebra& l, const SweepOptions& opt) {
  const std::size_t n = l.size();
  require(l.bracket.size() == n * n && l.origin < n, ErrorKind::malformed, "malformed Lie affebra tables");
  const auto& S = l.affine;
  const auto& H = S.heap;
  const Elem o = l.origin;
  const auto P = static_cast<std::size_t>(S.field.p());
  auto add = [&](Elem x, Elem y) { return H.op(x, o, y); };
  auto sub = [&](Elem x, Elem y) { return H.op(x, y, o); };
  auto lin = [&](Elem v, Elem c) { return sub(l(v, c), l(o, c)); };

  ReportBuilder rb(opt);
  rb.run(n, [&](Elem c, WitnessSink& s) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          Elem lhs = l(H.op(x, y, z), c), rhs = H.op(l(x, c), l(y, c), l(z, c));
          if (lhs != rhs && s.add({"biaff.left", {x, y, z, c}, lhs, rhs})) return;
          lhs = l(c, H.op(x, y, z)), rhs = H.op(l(c, x), l(c, y), l(c, z));
          if (lhs != rhs && s.add({"biaff.right", {c, x, y, z}, lhs, rhs})) return;
        }
  });
  rb.run(P, [&](Elem al, WitnessSink& s) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem c = 0; c < n; ++c) {
          const Elem w = S.act(int(al), x, y);
          Elem lhs = l(w, c), rhs = S.act(int(al), l(x, c), l(y, c));
          if (lhs != rhs && s.add({"biaff.left", {al, x, y, c}, lhs, rhs})) return;
          lhs = l(c, w), rhs = S.act(int(al), l(c, x), l(c, y));
          if (lhs != rhs && s.add({"biaff.right", {al, c, x, y}, lhs, rhs})) return;
        }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b) {
      const Elem lhs = add(l(a, b), l(b, a));
      if (lhs != o && s.add({"antisym", {a, b}, lhs, o})) return;
    }
  });
  rb.run(n, [&](Elem a0, WitnessSink& s) {
    for (Elem v = 0; v < n; ++v)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = sub(l(add(a0, v), c), l(a0, c)), rhs = lin(v, c);
        if (lhs != rhs && s.add({"lin.welldef", {a0, v, c}, lhs, rhs})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = add(add(lin(l(a, b), c), lin(l(b, c), a)), lin(l(c, a), b));
        if (lhs != o && s.add({"jacobi.aff", {a, b, c}, lhs, o})) return;
      }
  });
  return rb.take();
}

Elem linearized_bracket(const LieAffebra& l, Elem v, Elem c) {
  const std::size_t n = l.size();
  require(v < n && c < n, ErrorKind::malformed, "element out of range");
  const auto& H = l.affine.heap;
  const Elem o = l.origin;
  const Elem value = H.op(l(v, c), l(o, c), o);
  for (Elem a0 = 0; a0 < n; ++a0) {
    const Elem shifted = H.op(a0, o, v);
    if (H.op(l(shifted, c), l(a0, c), o) != value)
      throw Error(ErrorKind::invalid, "linearisation depends on the reference point " + std::to_string(a0));
  }
  return value;
}

LieTernary affebra_to_ternary(const LieAffebra& l, bool force_char2) {
  if (l.affine.field.characteristic() == 2 && !force_char2)
    throw Error(ErrorKind::hypothesis,
                "affebra-to-ternary needs a field of characteristic different from 2 (use the override to force)");
  const std::size_t n = l.size();
  const auto& H = l.affine.heap;
  std::vector<Elem> br(n * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) br[(a * n + b) * n + c] = H.op(b, l.origin, l(a, c));
  return LieTernary::make(l.affine, std::move(br));
}

LieAffebra ternary_to_affebra(const LieTernary& h, Elem o) {
  require(h.affine.has_value(), ErrorKind::malformed, "ternary-to-affebra needs an affine base");
  const std::size_t n = h.size();
  require(o < n, ErrorKind::malformed, "origin out of range");
  std::vector<Elem> br(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) br[a * n + b] = h(a, o, b);
  return LieAffebra::make(*h.affine, o, std::move(br));
}

LieRingView retract_lie_ring(const LieTernary& h, Elem o) {
  const std::size_t n = h.size();
  require(o < n, ErrorKind::malformed, "basepoint out of range");
  std::vector<Elem> br(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const std::array<Elem, 5> word{h(a, o, b), h(a, o, o), o, h(o, o, b), o};
      br[a * n + b] = eval_word(h.heap, word);
    }
  return LieRingView{retract_at(h.heap, o), std::move(br), h.affine};
}

ViolationReport validate_lie_ring(const LieRingView& r, const SweepOptions& opt) {
  const auto& G = r.group;
  const std::size_t n = G.order();
  require(r.bracket.size() == n * n, ErrorKind::malformed, "Lie ring bracket must have n*n entries");
  const Elem z = G.zero();
  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = r(G.add(a, b), c), rhs = G.add(r(a, c), r(b, c));
        if (lhs != rhs && s.add({"lr.left_add", {a, b, c}, lhs, rhs})) return;
        lhs = r(a, G.add(b, c)), rhs = G.add(r(a, b), r(a, c));
        if (lhs != rhs && s.add({"lr.right_add", {a, b, c}, lhs, rhs})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    if (r(a, a) != z) s.add({"lr.alt", {a}, r(a, a), z});
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b) {
      const Elem lhs = G.add(r(a, b), r(b, a));
      if (lhs != z && s.add({"lr.antisym", {a, b}, lhs, z})) return;
    }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = G.add(G.add(r(r(a, b), c), r(r(b, c), a)), r(r(c, a), b));
        if (lhs != z && s.add({"lr.jacobi", {a, b, c}, lhs, z})) return;
      }
  });
  if (r.affine) {
    const auto& S = *r.affine;
    const auto P = static_cast<std::size_t>(S.field.p());
    rb.run(P, [&](Elem al, WitnessSink& s) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          const Elem scaled = S.act(int(al), z, r(a, b));
          Elem lhs = r(S.act(int(al), z, a), b);
          if (lhs != scaled && s.add({"lr.scalar", {al, a, b}, lhs, scaled})) return;
          lhs = r(a, S.act(int(al), z, b));
          if (lhs != scaled && s.add({"lr.scalar", {al, a, b}, lhs, scaled})) return;
        }
    });
  }
  return rb.take();
}

LieTernary strengthen_bracket(const LieTernary& h, Elem o) {
  const std::size_t n = h.size();
  require(o < n, ErrorKind::malformed, "basepoint out of range");
  std::vector<Elem> br(n * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const std::array<Elem, 5> word{h(a, o, c), h(a, o, o), o, h(o, o, c), b};
        br[(a * n + b) * n + c] = eval_word(h.heap, word);
      }
  return LieTernary{h.heap, h.affine, std::move(br)};
}

}  // namespace heaplie
