#pragma once

#include <span>
#include <vector>

#include "heaplie/heap.hpp"

namespace heaplie {

inline constexpr int kMaxPrime = 13;
inline constexpr std::size_t kMaxAffineCarrier = 32;

class PrimeField {
 public:
  /// Throws Error(malformed) unless p is a prime <= 13.
  explicit PrimeField(int p);

  int p() const noexcept { return p_; }
  int add(int a, int b) const noexcept { return (a + b) % p_; }
  int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
  int mul(int a, int b) const noexcept { return (a * b) % p_; }
  int characteristic() const noexcept { return p_; }

  bool operator==(const PrimeField&) const = default;

 private:
  int p_;
};

/// Heap with ternary scalar action: lambda[(alpha*n + a)*n + b] = Λ(alpha, a, b).
/// Λ(alpha, a, b) moves a towards b by alpha times the vector from a to b.
struct AffineStructure {
  FiniteHeap heap;
  PrimeField field{2};
  std::vector<Elem> lambda;

  /// Checks table shape, entry range and that |carrier| is a power of p (<= 32).
  static AffineStructure make(FiniteHeap heap, PrimeField field, std::vector<Elem> lambda);

  std::size_t size() const noexcept { return heap.size(); }
  Elem act(int alpha, Elem a, Elem b) const noexcept {
    const std::size_t n = heap.size();
    return lambda[(static_cast<std::size_t>(alpha) * n + a) * n + b];
  }

  bool operator==(const AffineStructure&) const = default;
};

ViolationReport validate_affine(const AffineStructure& s, const SweepOptions& opt = {});

/// Vector space A(o): addition is the retract at o, alpha·a = Λ(alpha, o, a).
struct VectorSpaceView {
  AffineStructure affine;
  Elem origin = 0;

  Elem zero() const noexcept { return origin; }
  Elem add(Elem a, Elem b) const noexcept { return affine.heap.op(a, origin, b); }
  Elem neg(Elem a) const noexcept { return affine.heap.op(origin, a, origin); }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem scale(int alpha, Elem a) const noexcept { return affine.act(alpha, origin, a); }
};

ViolationReport validate_vector_space(const VectorSpaceView& v, const SweepOptions& opt = {});

/// Throws InvalidStructure carrying the vector-space report if an axiom fails.
VectorSpaceView vector_space_at(const AffineStructure& s, Elem o);

/// Vector from a to b in A(o): [o, a, b].
Elem arrow(const AffineStructure& s, Elem o, Elem a, Elem b);

/// Standard d-dimensional affine space over F_p: Λ(alpha,a,b) = a + alpha(b - a).
AffineStructure affine_from_vector_action(int p, int d);

/// Same construction over any group of exponent p (used for file inputs).
AffineStructure affine_from_group(const AbelianGroup& g, const PrimeField& field);

ViolationReport validate_affine_hom(std::span<const Elem> f, const AffineStructure& from, const AffineStructure& to,
                                    const SweepOptions& opt = {});

/// a -> [f(a), f(oA), oB]; throws Error(invalid) if f is not an affine homomorphism.
ElementMap linearize(std::span<const Elem> f, const AffineStructure& from, const AffineStructure& to, Elem oA,
                     Elem oB);

}  // namespace heaplie
