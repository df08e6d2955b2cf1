#include "heaplie/affine.hpp"

#include <string>

namespace heaplie {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of(std::size_t n, int p) {
  while (n > 1 && n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
  return n == 1;
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
  require(is_prime(p) && p <= kMaxPrime, ErrorKind::malformed,
          "field characteristic must be a prime <= " + std::to_string(kMaxPrime));
}

AffineStructure AffineStructure::make(FiniteHeap heap, PrimeField field, std::vector<Elem> lambda) {
  const std::size_t n = heap.size();
  require(is_power_of(n, field.p()), ErrorKind::malformed, "affine carrier size must be a power of p");
  require(n <= kMaxAffineCarrier, ErrorKind::budget,
          "affine carrier limited to " + std::to_string(kMaxAffineCarrier) + " points");
  require(lambda.size() == static_cast<std::size_t>(field.p()) * n * n, ErrorKind::malformed,
          "lambda must hold p tables of n*n entries");
  for (Elem v : lambda) require(v < n, ErrorKind::malformed, "lambda entry out of range");
  return AffineStructure{std::move(heap), field, std::move(lambda)};
}

ViolationReport validate_affine(const AffineStructure& s, const SweepOptions& opt) {
  const std::size_t n = s.size();
  const int p = s.field.p();
  const auto& F = s.field;
  const auto& H = s.heap;
  require(is_power_of(n, p), ErrorKind::malformed, "affine carrier size must be a power of p");
  require(s.lambda.size() == static_cast<std::size_t>(p) * n * n, ErrorKind::malformed,
          "lambda must hold p tables of n*n entries");
  const auto P = static_cast<std::size_t>(p);

  ReportBuilder rb(opt);
  // Λ(0,a,b) = a = Λ(1,b,a)
  rb.run(n, [&](Elem a, WitnessSink& s2) {
    for (Elem b = 0; b < n; ++b) {
      if (s.act(0, a, b) != a && s2.add({"0.1", {a, b}, s.act(0, a, b), a})) return;
      if (s.act(1, b, a) != a && s2.add({"0.1", {a, b}, s.act(1, b, a), a})) return;
    }
  });
  rb.run(P, [&](Elem al, WitnessSink& s2) {
    for (Elem a = 0; a < n; ++a)
      if (s.act(int(al), a, a) != a && s2.add({"idem", {al, a}, s.act(int(al), a, a), a})) return;
  });
  // Λ(α-β+γ,a,b) = [Λ(α,a,b), Λ(β,a,b), Λ(γ,a,b)]
  rb.run(P, [&](Elem al, WitnessSink& s2) {
    for (int be = 0; be < p; ++be)
      for (int ga = 0; ga < p; ++ga)
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b) {
            const Elem l = s.act(F.add(F.sub(int(al), be), ga), a, b);
            const Elem r = H.op(s.act(int(al), a, b), s.act(be, a, b), s.act(ga, a, b));
            if (l != r && s2.add({"l.heap", {al, Elem(be), Elem(ga), a, b}, l, r})) return;
          }
  });
  // Λ(αβ,a,b) = Λ(α,a,Λ(β,a,b))
  rb.run(P, [&](Elem al, WitnessSink& s2) {
    for (int be = 0; be < p; ++be)
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          const Elem l = s.act(F.mul(int(al), be), a, b);
          const Elem r = s.act(int(al), a, s.act(be, a, b));
          if (l != r && s2.add({"a.assoc", {al, Elem(be), a, b}, l, r})) return;
        }
  });
  // Λ(α,a,b) = [Λ(α,c,b), Λ(α,c,a), a]
  rb.run(P, [&](Elem al, WitnessSink& s2) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          const Elem l = s.act(int(al), a, b);
          const Elem r = H.op(s.act(int(al), c, b), s.act(int(al), c, a), a);
          if (l != r && s2.add({"b.change", {al, a, b, c}, l, r})) return;
        }
  });
  // Λ(α,a,[b,c,d]) = [Λ(α,a,b), Λ(α,a,c), Λ(α,a,d)]
  rb.run(P * n, [&](Elem lead, WitnessSink& s2) {
    const int al = int(lead / n);
    const Elem a = Elem(lead % n);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const Elem l = s.act(al, a, H.op(b, c, d));
          const Elem r = H.op(s.act(al, a, b), s.act(al, a, c), s.act(al, a, d));
          if (l != r && s2.add({"r.heap", {Elem(al), a, b, c, d}, l, r})) return;
        }
  });
  return rb.take();
}

ViolationReport validate_vector_space(const VectorSpaceView& v, const SweepOptions& opt) {
  const std::size_t n = v.affine.size();
  const int p = v.affine.field.p();
  const auto& F = v.affine.field;
  const auto P = static_cast<std::size_t>(p);
  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem l = v.add(v.add(a, b), c), r = v.add(a, v.add(b, c));
        if (l != r && s.add({"v.add_assoc", {a, b, c}, l, r})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      if (v.add(a, b) != v.add(b, a) && s.add({"v.add_comm", {a, b}, v.add(a, b), v.add(b, a)})) return;
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    if (v.add(a, v.zero()) != a) s.add({"v.zero", {a}, v.add(a, v.zero()), a});
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    if (v.add(a, v.neg(a)) != v.zero()) s.add({"v.neg", {a}, v.add(a, v.neg(a)), v.zero()});
  });
  rb.run(P, [&](Elem al, WitnessSink& s) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem l = v.scale(int(al), v.add(a, b)), r = v.add(v.scale(int(al), a), v.scale(int(al), b));
        if (l != r && s.add({"v.scalar_dist", {al, a, b}, l, r})) return;
      }
  });
  rb.run(P, [&](Elem al, WitnessSink& s) {
    for (int be = 0; be < p; ++be)
      for (Elem a = 0; a < n; ++a) {
        const Elem l = v.scale(F.add(int(al), be), a), r = v.add(v.scale(int(al), a), v.scale(be, a));
        if (l != r && s.add({"v.field_dist", {al, Elem(be), a}, l, r})) return;
      }
  });
  rb.run(P, [&](Elem al, WitnessSink& s) {
    for (int be = 0; be < p; ++be)
      for (Elem a = 0; a < n; ++a) {
        const Elem l = v.scale(F.mul(int(al), be), a), r = v.scale(int(al), v.scale(be, a));
        if (l != r && s.add({"v.scalar_assoc", {al, Elem(be), a}, l, r})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    if (v.scale(1, a) != a) s.add({"v.unit", {a}, v.scale(1, a), a});
  });
  return rb.take();
}

VectorSpaceView vector_space_at(const AffineStructure& s, Elem o) {
  require(o < s.size(), ErrorKind::malformed, "origin out of range");
  VectorSpaceView v{s, o};
  auto report = validate_vector_space(v);
  if (!report.ok()) throw InvalidStructure("A(o) is not a vector space", std::move(report));
  return v;
}

Elem arrow(const AffineStructure& s, Elem o, Elem a, Elem b) { return s.heap.op(o, a, b); }

AffineStructure affine_from_group(const AbelianGroup& g, const PrimeField& field) {
  const std::size_t n = g.order();
  const int p = field.p();
  for (Elem a = 0; a < n; ++a)
    require(g.times(a, p) == g.zero(), ErrorKind::malformed, "group is not an F_p vector space");
  std::vector<Elem> lambda(static_cast<std::size_t>(p) * n * n);
  for (int al = 0; al < p; ++al)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        lambda[(static_cast<std::size_t>(al) * n + a) * n + b] = g.add(a, g.times(g.sub(b, a), al));
  return AffineStructure::make(heap_from_group(g), field, std::move(lambda));
}

AffineStructure affine_from_vector_action(int p, int d) {
  PrimeField field(p);
  require(d >= 0 && d <= 3, ErrorKind::malformed, "affine dimension must be between 0 and 3");
  std::vector<int> orders(static_cast<std::size_t>(d), p);
  return affine_from_group(AbelianGroup::cyclic_product(std::move(orders)), field);
}

ViolationReport validate_affine_hom(std::span<const Elem> f, const AffineStructure& from, const AffineStructure& to,
                                    const SweepOptions& opt) {
  require(from.field == to.field, ErrorKind::malformed, "affine maps need a common field");
  ReportBuilder rb(opt);
  rb.append(validate_heap_hom(f, from.heap, to.heap, opt));
  const std::size_t n = from.size();
  const auto P = static_cast<std::size_t>(from.field.p());
  rb.run(P, [&](Elem al, WitnessSink& s) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem l = f[from.act(int(al), a, b)], r = to.act(int(al), f[a], f[b]);
        if (l != r && s.add({"hom.aff", {al, a, b}, l, r})) return;
      }
  });
  return rb.take();
}

ElementMap linearize(std::span<const Elem> f, const AffineStructure& from, const AffineStructure& to, Elem oA,
                     Elem oB) {
  require(oA < from.size() && oB < to.size(), ErrorKind::malformed, "origin out of range");
  if (!validate_affine_hom(f, from, to).ok())
    throw Error(ErrorKind::invalid, "map is not an affine homomorphism");
  ElementMap out(from.size());
  for (Elem a = 0; a < from.size(); ++a) out[a] = to.heap.op(f[a], f[oA], oB);
  return out;
}

}  // namespace heaplie
