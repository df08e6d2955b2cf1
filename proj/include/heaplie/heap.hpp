#pragma once

#include <span>
#include <vector>

#include "heaplie/group.hpp"
#include "heaplie/sweep.hpp"

namespace heaplie {

inline constexpr std::size_t kMaxTableCarrier = 64;
inline constexpr std::size_t kMaxQuinticSweep = 32;

/// Raw ternary operation, entry [i,j,k] at (i*n + j)*n + k.
struct TernaryTable {
  std::size_t n = 0;
  std::vector<Elem> entries;

  Elem operator()(Elem a, Elem b, Elem c) const { return entries[(a * n + b) * n + c]; }
};

enum class HeapProvenance { from_group, from_table };

/// Abelian heap stored as an abelian group plus the point it was retracted at.
/// The ternary operation is [a,b,c] = a - b + c, independent of that point.
class FiniteHeap {
 public:
  FiniteHeap() = default;

  /// Validates the table exhaustively; throws InvalidStructure on failure.
  static FiniteHeap from_table(const TernaryTable& table);

  std::size_t size() const noexcept { return base_.order(); }
  Elem op(Elem a, Elem b, Elem c) const noexcept { return base_.add(base_.sub(a, b), c); }
  const AbelianGroup& group() const noexcept { return base_; }
  Elem basepoint() const noexcept { return basepoint_; }
  HeapProvenance provenance() const noexcept { return provenance_; }

  bool operator==(const FiniteHeap& o) const { return base_ == o.base_; }

 private:
  friend FiniteHeap heap_from_group(AbelianGroup g);
  AbelianGroup base_;
  Elem basepoint_ = 0;
  HeapProvenance provenance_ = HeapProvenance::from_group;
};

FiniteHeap heap_from_group(AbelianGroup g);

/// Group on the carrier with a + b = [a,o,b], zero o, -a = [o,a,o].
AbelianGroup retract_at(const FiniteHeap& h, Elem o);

TernaryTable heap_table(const FiniteHeap& h);

/// Associativity of placement (quintuples), Mal'cev and symmetry.
ViolationReport validate_heap(const TernaryTable& t, const SweepOptions& opt = {});

/// f([a,b,c]) = [f a, f b, f c] over all triples of the domain.
ViolationReport validate_heap_hom(std::span<const Elem> f, const FiniteHeap& from, const FiniteHeap& to,
                                  const SweepOptions& opt = {});

/// Value of [w1, w2, ..., w_{2k+1}]; throws Error(malformed) for even length.
Elem eval_word(const FiniteHeap& h, std::span<const Elem> word);

/// Affine test used by the slot checks: f is a heap morphism iff
/// f(a + b) = f(a) - f(0) + f(b) in the base group.
bool is_heap_morphism(const FiniteHeap& from, const FiniteHeap& to, std::span<const Elem> f);

}  // namespace heaplie
