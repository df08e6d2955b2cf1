#include "heaplie/truss.hpp"

namespace heaplie {

TrussStructure TrussStructure::make(FiniteHeap heap, std::vector<Elem> mul) {
  const std::size_t n = heap.size();
  require(mul.size() == n * n, ErrorKind::malformed, "multiplication table must have n*n entries");
  for (Elem v : mul) require(v < n, ErrorKind::malformed, "multiplication entry out of range");
  return TrussStructure{std::move(heap), std::move(mul)};
}

ViolationReport validate_truss(const TrussStructure& t, const SweepOptions& opt) {
  const std::size_t n = t.size();
  require(t.mul.size() == n * n, ErrorKind::malformed, "multiplication table must have n*n entries");
  const auto& H = t.heap;
  auto m = [&](Elem a, Elem b) { return t.multiply(a, b); };
  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem l = m(m(a, b), c), r = m(a, m(b, c));
        if (l != r && s.add({"assoc", {a, b, c}, l, r})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const Elem l = m(a, H.op(b, c, d)), r = H.op(m(a, b), m(a, c), m(a, d));
          if (l != r && s.add({"truss.left", {a, b, c, d}, l, r})) return;
        }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const Elem l = m(H.op(a, b, c), d), r = H.op(m(a, d), m(b, d), m(c, d));
          if (l != r && s.add({"truss.right", {a, b, c, d}, l, r})) return;
        }
  });
  return rb.take();
}

ViolationReport validate_ring_multiplication(const AbelianGroup& g, std::span<const Elem> mul,
                                             const SweepOptions& opt) {
  const std::size_t n = g.order();
  require(mul.size() == n * n, ErrorKind::malformed, "multiplication table must have n*n entries");
  for (Elem v : mul) require(v < n, ErrorKind::malformed, "multiplication entry out of range");
  auto m = [&](Elem a, Elem b) { return mul[a * n + b]; };
  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem l = m(a, g.add(b, c)), r = g.add(m(a, b), m(a, c));
        if (l != r && s.add({"ring.left", {a, b, c}, l, r})) return;
        l = m(g.add(a, b), c), r = g.add(m(a, c), m(b, c));
        if (l != r && s.add({"ring.right", {a, b, c}, l, r})) return;
      }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem l = m(m(a, b), c), r = m(a, m(b, c));
        if (l != r && s.add({"assoc", {a, b, c}, l, r})) return;
      }
  });
  return rb.take();
}

TrussStructure truss_from_ring(const AbelianGroup& g, std::vector<Elem> mul) {
  auto report = validate_ring_multiplication(g, mul);
  if (!report.ok()) throw InvalidStructure("multiplication is not an associative biadditive product", report);
  return TrussStructure::make(heap_from_group(g), std::move(mul));
}

TrussStructure upper_triangular_f2() {
  const AbelianGroup g = AbelianGroup::cyclic_product({2, 2, 2});
  std::vector<Elem> mul(64);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      const auto u = g.digits(x), v = g.digits(y);
      const int d[3] = {u[0] * v[0] % 2, (u[0] * v[1] + u[1] * v[2]) % 2, u[2] * v[2] % 2};
      mul[x * 8 + y] = g.encode(d);
    }
  return TrussStructure::make(heap_from_group(g), std::move(mul));
}

ViolationReport validate_derivation(std::span<const Elem> d, const TrussStructure& t, const SweepOptions& opt) {
  const std::size_t n = t.size();
  ReportBuilder rb(opt);
  rb.append(validate_heap_hom(d, t.heap, t.heap, opt));
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b) {
      const Elem l = d[t.multiply(a, b)];
      const Elem r = t.heap.op(t.multiply(d[a], b), t.multiply(a, b), t.multiply(a, d[b]));
      if (l != r && s.add({"leibniz", {a, b}, l, r})) return;
    }
  });
  return rb.take();
}

}  // namespace heaplie
