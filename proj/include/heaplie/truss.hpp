#pragma once

#include <span>
#include <vector>

#include "heaplie/heap.hpp"

namespace heaplie {

/// Heap with a binary multiplication table mul[a*n + b] = ab.
struct TrussStructure {
  FiniteHeap heap;
  std::vector<Elem> mul;

  /// Checks table shape and range only; see validate_truss for the axioms.
  static TrussStructure make(FiniteHeap heap, std::vector<Elem> mul);

  std::size_t size() const noexcept { return heap.size(); }
  Elem multiply(Elem a, Elem b) const noexcept { return mul[a * heap.size() + b]; }

  bool operator==(const TrussStructure&) const = default;
};

/// Associativity, then a[b,c,d] = [ab,ac,ad] and [a,b,c]d = [ad,bd,cd].
ViolationReport validate_truss(const TrussStructure& t, const SweepOptions& opt = {});

/// Associativity plus biadditivity of `mul` over G; throws InvalidStructure otherwise.
TrussStructure truss_from_ring(const AbelianGroup& g, std::vector<Elem> mul);

ViolationReport validate_ring_multiplication(const AbelianGroup& g, std::span<const Elem> mul,
                                             const SweepOptions& opt = {});

/// Upper triangular 2x2 matrices over F_2 with matrix product, on Z2xZ2xZ2.
/// Element (a, b, c) stands for [[a, b], [0, c]].
TrussStructure upper_triangular_f2();

/// Heap endomorphism plus D(ab) = [D(a)b, ab, aD(b)].
ViolationReport validate_derivation(std::span<const Elem> d, const TrussStructure& t, const SweepOptions& opt = {});

}  // namespace heaplie
