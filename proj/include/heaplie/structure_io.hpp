#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heaplie/lie.hpp"
#include "heaplie/truss.hpp"

namespace heaplie {

enum class StructureKind { heap, group, truss, lie_truss, affine, lie_affebra, heap_lie_affebra, lie_ring };

StructureKind parse_structure_kind(const std::string& name);
std::string structure_kind_name(StructureKind k);

/// On-disk description of a structure. Exactly one of group_orders and
/// heap_table is set; tables are flattened row-major.
struct StructureFile {
  StructureKind kind = StructureKind::heap;
  std::optional<std::vector<int>> group_orders;
  std::optional<std::vector<Elem>> heap_table;
  std::optional<std::vector<Elem>> mul_table;
  std::optional<std::vector<Elem>> bracket3;
  std::optional<std::vector<Elem>> bracket2;
  std::optional<std::vector<Elem>> lambda;
  std::optional<Elem> origin;
  std::optional<int> field_p;

  bool operator==(const StructureFile&) const = default;
};

/// Shape checks only (keys, lengths, ranges); Error(malformed) on failure.
StructureFile parse_structure(const std::string& json_text);

/// Compact JSON with sorted keys.
std::string serialize(const StructureFile& f);

std::size_t carrier_size(const StructureFile& f);

/// Builders; heap tables are validated and raise InvalidStructure.
FiniteHeap build_heap(const StructureFile& f);
AffineStructure build_affine(const StructureFile& f);
TrussStructure build_truss(const StructureFile& f);
LieTernary build_lie_ternary(const StructureFile& f);
LieAffebra build_lie_affebra(const StructureFile& f);
LieRingView build_lie_ring(const StructureFile& f);

StructureFile to_file(const FiniteHeap& h);
StructureFile to_file(const AffineStructure& a);
StructureFile to_file(const TrussStructure& t);
StructureFile to_file(const LieTernary& l);
StructureFile to_file(const LieAffebra& l);
/// Needs the heap the ring was retracted from and the basepoint.
StructureFile to_file(const LieRingView& r, const FiniteHeap& heap, Elem origin);

}  // namespace heaplie
