#pragma once

#include <optional>
#include <vector>

#include "heaplie/affine.hpp"
#include "heaplie/truss.hpp"

namespace heaplie {

/// Heap (optionally an affine space) with a ternary bracket,
/// bracket[(a*n + b)*n + c] = {a,b,c}.
struct LieTernary {
  FiniteHeap heap;
  std::optional<AffineStructure> affine;
  std::vector<Elem> bracket;

  static LieTernary make(FiniteHeap heap, std::vector<Elem> bracket);
  static LieTernary make(AffineStructure affine, std::vector<Elem> bracket);

  std::size_t size() const noexcept { return heap.size(); }
  Elem operator()(Elem a, Elem b, Elem c) const noexcept {
    const std::size_t n = heap.size();
    return bracket[(a * n + b) * n + c];
  }

  bool operator==(const LieTernary&) const = default;
};

/// Slot morphisms (affine when the base is affine), {a,b,a} = b,
/// [{a,b,c}, b, {c,b,a}] = b, and the four-variable Jacobi identity for all o.
ViolationReport validate_lie_truss(const LieTernary& l, const SweepOptions& opt = {});

/// Five-variable Jacobi identity; carriers above 32 points are refused.
ViolationReport validate_strong_jacobi(const LieTernary& l, const SweepOptions& opt = {});

/// {a,b,c} = [ac, ca, b].
LieTernary bracket_from_truss(const TrussStructure& t);

/// Der(T) as a Lie truss: pointwise heap operation, {D1,D2,D3} = [D1D3, D3D1, D2].
/// Carrier element i stands for derivations[i].
struct DerivationLieTruss {
  std::vector<ElementMap> derivations;
  LieTernary lie;
};

/// Throws Error(invalid) when the given maps are not closed under either operation.
DerivationLieTruss derivations_lie_truss(const TrussStructure& t, std::vector<ElementMap> derivations);

/// Affine space with a binary bracket whose values are read in A(origin).
struct LieAffebra {
  AffineStructure affine;
  Elem origin = 0;
  std::vector<Elem> bracket;  // bracket[a*n + b] = {a,b}

  static LieAffebra make(AffineStructure affine, Elem origin, std::vector<Elem> bracket);

  std::size_t size() const noexcept { return affine.size(); }
  Elem operator()(Elem a, Elem b) const noexcept { return bracket[a * affine.size() + b]; }

  bool operator==(const LieAffebra&) const = default;
};

ViolationReport validate_lie_affebra(const LieAffebra& l, const SweepOptions& opt = {});

/// Linear part of {-, c} at v, measured from the origin. Throws Error(invalid)
/// if the value depends on the reference point.
Elem linearized_bracket(const LieAffebra& l, Elem v, Elem c);

/// {a,b,c} = b + {a,c} in A(o). Fields of characteristic 2 raise
/// Error(hypothesis) unless `force_char2` is set.
LieTernary affebra_to_ternary(const LieAffebra& l, bool force_char2 = false);

/// {a,b} = {a,o,b}; requires an affine base.
LieAffebra ternary_to_affebra(const LieTernary& h, Elem o);

/// The retract A(o) with [a,b] = {a,o,b} - {a,o,o} - {o,o,b}.
struct LieRingView {
  AbelianGroup group;
  std::vector<Elem> bracket;
  std::optional<AffineStructure> affine;  // present for Lie algebras over F_p

  Elem operator()(Elem a, Elem b) const noexcept { return bracket[a * group.order() + b]; }
};

LieRingView retract_lie_ring(const LieTernary& h, Elem o);

/// Biadditivity, [a,a] = 0, antisymmetry, cyclic Jacobi; scalar linearity when affine.
ViolationReport validate_lie_ring(const LieRingView& r, const SweepOptions& opt = {});

/// {a,b,c}_o = [{a,o,c}, {a,o,o}, o, {o,o,c}, b].
LieTernary strengthen_bracket(const LieTernary& h, Elem o);

}  // namespace heaplie
