#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heaplie/symbolic/eval.hpp"

namespace heaplie::symbolic {

struct NamedTruss {
  std::string name;
  TrussStructure truss;
};

/// Every truss on Z2, Z3, Z4 and Z2xZ2; the ring, (Z_n, a+b) and the
/// left-zero truss on Z_n for n = 5..8; upper triangular 2x2 matrices over
/// F_2. Built once.
const std::vector<NamedTruss>& default_model_pool();

struct Counterexample {
  std::string model;
  TrussStructure truss;
  Assignment assignment;
  Elem lhs = 0;
  Elem rhs = 0;
};

/// Evaluates both sides under random assignments into random models of the
/// pool; brackets are read as [ac, ca, b]. At most 8 variables.
std::optional<Counterexample> random_falsify(const Expr& lhs, const Expr& rhs, std::size_t samples,
                                             std::uint64_t seed = 0x5eedULL,
                                             const std::vector<NamedTruss>* pool = nullptr);

}  // namespace heaplie::symbolic
