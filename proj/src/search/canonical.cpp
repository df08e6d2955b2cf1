#include "heaplie/search.hpp"

#include <algorithm>
#include <set>

namespace heaplie {

std::vector<ElementMap> heap_automorphisms(const AbelianGroup& g) {
  const std::size_t n = g.order();
  const std::size_t cap = 1'000'000 / std::max<std::size_t>(n, 1);
  const auto aut = g.automorphisms(1u << 22);
  require(aut.size() <= cap, ErrorKind::budget,
          "heap automorphism group too large (" + std::to_string(aut.size()) + " x " + std::to_string(n) + ")");
  std::vector<ElementMap> out;
  out.reserve(aut.size() * n);
  for (const auto& a : aut)
    for (Elem t = 0; t < n; ++t) {
      ElementMap f(n);
      for (Elem x = 0; x < n; ++x) f[x] = g.add(a[x], t);
      out.push_back(std::move(f));
    }
  return out;
}

CanonicalForm canonical_form(std::span<const Elem> table, std::size_t n, int arity,
                             const std::vector<ElementMap>& autos) {
  require(arity == 2 || arity == 3, ErrorKind::malformed, "canonical forms exist for binary and ternary tables");
  require(n <= 256, ErrorKind::budget, "carrier too large for byte tables");
  const std::size_t len = arity == 2 ? n * n : n * n * n;
  require(table.size() == len, ErrorKind::malformed, "table length does not match arity");
  CanonicalForm best(table.begin(), table.end());
  CanonicalForm cur(len);
  ElementMap inv(n);
  for (const auto& phi : autos) {
    for (Elem x = 0; x < n; ++x) inv[phi[x]] = x;
    // Build the relabelled table in index order, abandoning it once it is larger.
    bool smaller = false, larger = false;
    for (std::size_t i = 0; i < len && !larger; ++i) {
      std::size_t src;
      if (arity == 2) {
        src = inv[i / n] * n + inv[i % n];
      } else {
        src = (inv[i / (n * n)] * n + inv[(i / n) % n]) * n + inv[i % n];
      }
      const auto v = static_cast<std::uint8_t>(phi[table[src]]);
      cur[i] = v;
      if (!smaller) {
        if (v < best[i])
          smaller = true;
        else if (v > best[i])
          larger = true;
      }
    }
    if (smaller) best = cur;
  }
  return best;
}

CanonicalForm canonical_form(const TrussStructure& t) {
  return canonical_form(t.mul, t.size(), 2, heap_automorphisms(t.heap.group()));
}

CanonicalForm canonical_form(const LieTernary& l) {
  return canonical_form(l.bracket, l.size(), 3, heap_automorphisms(l.heap.group()));
}

std::size_t count_classes(const AbelianGroup& g, const std::vector<std::vector<Elem>>& tables, int arity) {
  const auto autos = heap_automorphisms(g);
  std::set<CanonicalForm> forms;
  for (const auto& t : tables) forms.insert(canonical_form(t, g.order(), arity, autos));
  return forms.size();
}

}  // namespace heaplie
