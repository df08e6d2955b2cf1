#include "heaplie/structure_io.hpp"

#include <json.hpp>

namespace heaplie {

using nlohmann::json;

namespace {

const std::pair<StructureKind, const char*> kKinds[] = {
    {StructureKind::heap, "heap"},
    {StructureKind::group, "group"},
    {StructureKind::truss, "truss"},
    {StructureKind::lie_truss, "lie_truss"},
    {StructureKind::affine, "affine"},
    {StructureKind::lie_affebra, "lie_affebra"},
    {StructureKind::heap_lie_affebra, "heap_lie_affebra"},
    {StructureKind::lie_ring, "lie_ring"},
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::malformed, what); }

std::vector<Elem> elem_array(const json& j, const char* key) {
  if (!j.is_array()) bad(std::string("'") + key + "' must be an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000)
      bad(std::string("'") + key + "' must hold non-negative integers");
    out.push_back(static_cast<Elem>(v.get<long long>()));
  }
  return out;
}

void check_table(const std::optional<std::vector<Elem>>& t, std::size_t len, std::size_t n, const char* key) {
  if (!t) return;
  if (t->size() != len)
    bad(std::string("'") + key + "' has " + std::to_string(t->size()) + " entries; expected " + std::to_string(len));
  for (Elem v : *t)
    if (v >= n) bad(std::string("'") + key + "' entry " + std::to_string(v) + " out of range");
}

void need(bool present, StructureKind k, const char* key) {
  if (!present) bad("kind '" + structure_kind_name(k) + "' requires '" + key + "'");
}

void forbid(bool present, StructureKind k, const char* key) {
  if (present) bad("kind '" + structure_kind_name(k) + "' does not take '" + key + "'");
}

std::size_t group_order(const std::vector<int>& orders) {
  std::size_t n = 1;
  for (int o : orders) {
    if (o < 1) bad("group orders must be positive");
    n *= static_cast<std::size_t>(o);
    if (n > kMaxGroupOrder) bad("group too large");
  }
  return n;
}

void set_heap(StructureFile& f, const FiniteHeap& h) {
  if (h.group().has_basis() && h.group().zero() == 0 && h.provenance() == HeapProvenance::from_group)
    f.group_orders = h.group().orders();
  else
    f.heap_table = heap_table(h).entries;
}

AffineStructure affine_for(const StructureFile& f, const FiniteHeap& heap) {
  const PrimeField field(*f.field_p);
  if (f.lambda) return AffineStructure::make(heap, field, *f.lambda);
  return affine_from_group(heap.group(), field);
}

}  // namespace

StructureKind parse_structure_kind(const std::string& name) {
  for (const auto& [k, s] : kKinds)
    if (name == s) return k;
  bad("unknown kind '" + name + "'");
}

std::string structure_kind_name(StructureKind k) {
  for (const auto& [kk, s] : kKinds)
    if (kk == k) return s;
  return "?";
}

std::size_t carrier_size(const StructureFile& f) {
  if (f.group_orders) return group_order(*f.group_orders);
  const std::size_t len = f.heap_table ? f.heap_table->size() : 0;
  std::size_t n = 1;
  while (n * n * n < len) ++n;
  return n;
}

StructureFile parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("structure file must be a JSON object");
  StructureFile f;
  if (!j.contains("kind") || !j["kind"].is_string()) bad("missing string field 'kind'");
  f.kind = parse_structure_kind(j["kind"].get<std::string>());
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (key == "group") {
      if (!value.is_object() || !value.contains("orders") || value.size() != 1)
        bad("'group' must be {\"orders\": [...]}");
      std::vector<int> orders;
      for (const auto& o : value["orders"]) {
        if (!o.is_number_integer() || o.get<int>() < 1) bad("group orders must be positive integers");
        orders.push_back(o.get<int>());
      }
      std::erase(orders, 1);
      f.group_orders = std::move(orders);
    } else if (key == "heap_table") {
      f.heap_table = elem_array(value, "heap_table");
    } else if (key == "mul_table") {
      f.mul_table = elem_array(value, "mul_table");
    } else if (key == "bracket3") {
      f.bracket3 = elem_array(value, "bracket3");
    } else if (key == "bracket2") {
      f.bracket2 = elem_array(value, "bracket2");
    } else if (key == "lambda") {
      f.lambda = elem_array(value, "lambda");
    } else if (key == "origin") {
      if (!value.is_number_integer() || value.get<long long>() < 0) bad("'origin' must be a non-negative integer");
      f.origin = static_cast<Elem>(value.get<long long>());
    } else if (key == "field_p") {
      if (!value.is_number_integer()) bad("'field_p' must be an integer");
      f.field_p = value.get<int>();
    } else {
      bad("unknown field '" + key + "'");
    }
  }
  if (f.group_orders.has_value() == f.heap_table.has_value()) bad("exactly one of 'group' and 'heap_table' is required");

  std::size_t n = 0;
  if (f.group_orders) {
    n = group_order(*f.group_orders);
  } else {
    n = carrier_size(f);
    if (n * n * n != f.heap_table->size())
      bad("'heap_table' has " + std::to_string(f.heap_table->size()) + " entries; expected a cube n^3");
    if (n > kMaxTableCarrier) bad("heap table carrier exceeds " + std::to_string(kMaxTableCarrier));
    check_table(f.heap_table, n * n * n, n, "heap_table");
  }
  const std::size_t p = f.field_p ? static_cast<std::size_t>(std::max(*f.field_p, 0)) : 0;
  check_table(f.mul_table, n * n, n, "mul_table");
  check_table(f.bracket3, n * n * n, n, "bracket3");
  check_table(f.bracket2, n * n, n, "bracket2");
  check_table(f.lambda, p * n * n, n, "lambda");
  if (f.origin && *f.origin >= n) bad("'origin' out of range");
  if (f.field_p) (void)PrimeField(*f.field_p);
  if (f.lambda && !f.field_p) bad("'lambda' needs 'field_p'");

  const StructureKind k = f.kind;
  const bool affine_kind =
      k == StructureKind::affine || k == StructureKind::lie_affebra || k == StructureKind::heap_lie_affebra;
  if (affine_kind) need(f.field_p.has_value(), k, "field_p");
  if (!affine_kind && k != StructureKind::lie_ring)
    forbid(f.field_p.has_value(), k, "field_p");
  if (k == StructureKind::truss)
    need(f.mul_table.has_value(), k, "mul_table");
  else
    forbid(f.mul_table.has_value(), k, "mul_table");
  if (k == StructureKind::lie_truss || k == StructureKind::heap_lie_affebra)
    need(f.bracket3.has_value(), k, "bracket3");
  else
    forbid(f.bracket3.has_value(), k, "bracket3");
  if (k == StructureKind::lie_affebra || k == StructureKind::lie_ring)
    need(f.bracket2.has_value(), k, "bracket2");
  else
    forbid(f.bracket2.has_value(), k, "bracket2");
  if (k != StructureKind::lie_affebra && k != StructureKind::lie_ring) forbid(f.origin.has_value(), k, "origin");
  return f;
}

std::string serialize(const StructureFile& f) {
  json j;
  j["kind"] = structure_kind_name(f.kind);
  if (f.group_orders) j["group"] = {{"orders", *f.group_orders}};
  if (f.heap_table) j["heap_table"] = *f.heap_table;
  if (f.mul_table) j["mul_table"] = *f.mul_table;
  if (f.bracket3) j["bracket3"] = *f.bracket3;
  if (f.bracket2) j["bracket2"] = *f.bracket2;
  if (f.lambda) j["lambda"] = *f.lambda;
  if (f.origin) j["origin"] = *f.origin;
  if (f.field_p) j["field_p"] = *f.field_p;
  return j.dump();
}

FiniteHeap build_heap(const StructureFile& f) {
  if (f.group_orders) return heap_from_group(AbelianGroup::cyclic_product(*f.group_orders));
  const std::size_t n = carrier_size(f);
  return FiniteHeap::from_table(TernaryTable{n, *f.heap_table});
}

AffineStructure build_affine(const StructureFile& f) {
  require(f.field_p.has_value(), ErrorKind::malformed, "affine structure needs 'field_p'");
  return affine_for(f, build_heap(f));
}

TrussStructure build_truss(const StructureFile& f) {
  require(f.mul_table.has_value(), ErrorKind::malformed, "truss needs 'mul_table'");
  return TrussStructure::make(build_heap(f), *f.mul_table);
}

LieTernary build_lie_ternary(const StructureFile& f) {
  require(f.bracket3.has_value(), ErrorKind::malformed, "Lie truss needs 'bracket3'");
  if (f.field_p) return LieTernary::make(build_affine(f), *f.bracket3);
  return LieTernary::make(build_heap(f), *f.bracket3);
}

LieAffebra build_lie_affebra(const StructureFile& f) {
  require(f.bracket2.has_value(), ErrorKind::malformed, "Lie affebra needs 'bracket2'");
  const AffineStructure a = build_affine(f);
  return LieAffebra::make(a, f.origin.value_or(a.heap.group().zero()), *f.bracket2);
}

LieRingView build_lie_ring(const StructureFile& f) {
  require(f.bracket2.has_value(), ErrorKind::malformed, "Lie ring needs 'bracket2'");
  const FiniteHeap h = build_heap(f);
  const Elem o = f.origin.value_or(h.group().zero());
  LieRingView r{retract_at(h, o), *f.bracket2, std::nullopt};
  if (f.field_p) r.affine = affine_for(f, h);
  return r;
}

StructureFile to_file(const FiniteHeap& h) {
  StructureFile f;
  f.kind = StructureKind::heap;
  set_heap(f, h);
  return f;
}

StructureFile to_file(const AffineStructure& a) {
  StructureFile f;
  f.kind = StructureKind::affine;
  set_heap(f, a.heap);
  f.field_p = a.field.p();
  f.lambda = a.lambda;
  return f;
}

StructureFile to_file(const TrussStructure& t) {
  StructureFile f;
  f.kind = StructureKind::truss;
  set_heap(f, t.heap);
  f.mul_table = t.mul;
  return f;
}

StructureFile to_file(const LieTernary& l) {
  StructureFile f;
  f.kind = l.affine ? StructureKind::heap_lie_affebra : StructureKind::lie_truss;
  set_heap(f, l.heap);
  f.bracket3 = l.bracket;
  if (l.affine) {
    f.field_p = l.affine->field.p();
    f.lambda = l.affine->lambda;
  }
  return f;
}

StructureFile to_file(const LieAffebra& l) {
  StructureFile f;
  f.kind = StructureKind::lie_affebra;
  set_heap(f, l.affine.heap);
  f.field_p = l.affine.field.p();
  f.lambda = l.affine.lambda;
  f.origin = l.origin;
  f.bracket2 = l.bracket;
  return f;
}

StructureFile to_file(const LieRingView& r, const FiniteHeap& heap, Elem origin) {
  StructureFile f;
  f.kind = StructureKind::lie_ring;
  set_heap(f, heap);
  f.origin = origin;
  f.bracket2 = r.bracket;
  if (r.affine) {
    f.field_p = r.affine->field.p();
    f.lambda = r.affine->lambda;
  }
  return f;
}

}  // namespace heaplie
