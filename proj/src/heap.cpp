#include "heaplie/heap.hpp"

#include <string>

namespace heaplie {

FiniteHeap heap_from_group(AbelianGroup g) {
  FiniteHeap h;
  h.basepoint_ = g.zero();
  h.base_ = std::move(g);
  h.provenance_ = HeapProvenance::from_group;
  return h;
}

FiniteHeap FiniteHeap::from_table(const TernaryTable& table) {
  auto report = validate_heap(table);
  if (!report.ok()) throw InvalidStructure("table is not an abelian heap", std::move(report));
  const std::size_t n = table.n;
  std::vector<Elem> add(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) add[a * n + b] = table(a, 0, b);
  FiniteHeap h;
  h.base_ = AbelianGroup::from_table(n, std::move(add), 0);
  h.basepoint_ = 0;
  h.provenance_ = HeapProvenance::from_table;
  return h;
}

AbelianGroup retract_at(const FiniteHeap& h, Elem o) {
  const std::size_t n = h.size();
  require(o < n, ErrorKind::malformed, "retract point out of range");
  if (o == h.group().zero()) return h.group();
  std::vector<Elem> add(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) add[a * n + b] = h.op(a, o, b);
  return AbelianGroup::from_table(n, std::move(add), o);
}

TernaryTable heap_table(const FiniteHeap& h) {
  TernaryTable t;
  t.n = h.size();
  t.entries.resize(t.n * t.n * t.n);
  for (Elem a = 0; a < t.n; ++a)
    for (Elem b = 0; b < t.n; ++b)
      for (Elem c = 0; c < t.n; ++c) t.entries[(a * t.n + b) * t.n + c] = h.op(a, b, c);
  return t;
}

ViolationReport validate_heap(const TernaryTable& t, const SweepOptions& opt) {
  const std::size_t n = t.n;
  require(n >= 1, ErrorKind::malformed, "heap carrier must be non-empty");
  require(t.entries.size() == n * n * n, ErrorKind::malformed,
          "heap table has " + std::to_string(t.entries.size()) + " entries, expected n^3 = " +
              std::to_string(n * n * n));
  for (Elem v : t.entries) require(v < n, ErrorKind::malformed, "heap table entry out of range");
  require(n <= kMaxQuinticSweep, ErrorKind::budget,
          "heap validation sweeps quintuples; carrier limited to " + std::to_string(kMaxQuinticSweep));

  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b) {
      if (t(a, b, b) != a && s.add({"h.Mal", {a, b}, t(a, b, b), a})) return;
      if (t(b, b, a) != a && s.add({"h.Mal", {a, b}, t(b, b, a), a})) return;
    }
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t(a, b, c) != t(c, b, a) && s.add({"h.ab", {a, b, c}, t(a, b, c), t(c, b, a)})) return;
  });
  rb.run(n, [&](Elem a1, WitnessSink& s) {
    for (Elem a2 = 0; a2 < n; ++a2)
      for (Elem a3 = 0; a3 < n; ++a3)
        for (Elem a4 = 0; a4 < n; ++a4)
          for (Elem a5 = 0; a5 < n; ++a5) {
            const Elem l = t(a1, a2, t(a3, a4, a5));
            const Elem r = t(t(a1, a2, a3), a4, a5);
            if (l != r && s.add({"h.assoc", {a1, a2, a3, a4, a5}, l, r})) return;
          }
  });
  return rb.take();
}

ViolationReport validate_heap_hom(std::span<const Elem> f, const FiniteHeap& from, const FiniteHeap& to,
                                  const SweepOptions& opt) {
  const std::size_t n = from.size();
  require(f.size() == n, ErrorKind::malformed, "map length does not match the domain carrier");
  for (Elem y : f) require(y < to.size(), ErrorKind::malformed, "map value outside the codomain carrier");
  ReportBuilder rb(opt);
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem l = f[from.op(a, b, c)], r = to.op(f[a], f[b], f[c]);
        if (l != r && s.add({"h.hom", {a, b, c}, l, r})) return;
      }
  });
  return rb.take();
}

Elem eval_word(const FiniteHeap& h, std::span<const Elem> word) {
  require(word.size() % 2 == 1, ErrorKind::malformed, "heap words have odd length");
  Elem acc = word[0];
  for (std::size_t i = 1; i + 1 < word.size(); i += 2) acc = h.op(acc, word[i], word[i + 1]);
  return acc;
}

bool is_heap_morphism(const FiniteHeap& from, const FiniteHeap& to, std::span<const Elem> f) {
  const auto& g = from.group();
  const Elem z = g.zero();
  const std::size_t n = from.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (f[g.add(a, b)] != to.op(f[a], f[z], f[b])) return false;
  return true;
}

}  // namespace heaplie
