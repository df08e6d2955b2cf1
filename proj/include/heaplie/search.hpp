#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heaplie/lie.hpp"
#include "heaplie/truss.hpp"

namespace heaplie {

enum class SearchKind { truss, ring, lie_truss, derivation };

SearchKind parse_search_kind(const std::string& name);
std::string search_kind_name(SearchKind k);

struct SearchSpec {
  AbelianGroup group;
  SearchKind kind = SearchKind::truss;
  bool up_to_iso = false;
  std::optional<std::size_t> limit;  // truncates the listing, not the counts
  int workers = 1;
  bool allow_large = false;  // lifts the candidate budget
};

/// Candidate budget of the structured searches without allow_large.
inline constexpr std::size_t kSearchBudget = 50'000'000;

/// Lexicographically least relabelled table over all heap automorphisms.
using CanonicalForm = std::vector<std::uint8_t>;

/// Every map x -> g(x) + t with g a group automorphism; Error(budget) when
/// |Aut| * n exceeds 10^6.
std::vector<ElementMap> heap_automorphisms(const AbelianGroup& g);

/// Canonical form of a flattened table of the given arity (2: binary op,
/// 3: ternary op) under the given relabellings.
CanonicalForm canonical_form(std::span<const Elem> table, std::size_t n, int arity,
                             const std::vector<ElementMap>& autos);

CanonicalForm canonical_form(const TrussStructure& t);
CanonicalForm canonical_form(const LieTernary& l);

template <class S>
struct Enumeration {
  std::vector<S> structures;  // sorted by canonical form; class representatives when up_to_iso
  std::size_t total = 0;      // labelled count
  std::size_t classes = 0;
  bool truncated = false;     // listing cut by the limit
};

/// Multiplications B(a,b) + L(a) + R(b) + k passing validate_truss.
Enumeration<TrussStructure> enumerate_trusses(const SearchSpec& spec);

/// Biadditive associative multiplications.
Enumeration<TrussStructure> enumerate_rings(const SearchSpec& spec);

/// Brackets with heap-morphic slots satisfying the Lie truss axioms.
Enumeration<LieTernary> enumerate_lie_brackets(const SearchSpec& spec);

/// Derivations of the form x -> g(x) + t, g additive. Sorted by table.
std::vector<ElementMap> enumerate_derivations(const TrussStructure& t, std::optional<std::size_t> limit = {});

struct WeakNotStrong {
  LieTernary bracket;
  Violation witness;  // failing quintuple (a, b, c, d, e)
};

std::vector<WeakNotStrong> search_weak_not_strong(const SearchSpec& spec);

/// Second strategy for the classification: backtracking over table cells with
/// affine propagation along rows and columns and associativity forcing.
/// Returns the labelled tables, sorted.
std::vector<std::vector<Elem>> truss_tables_by_propagation(const AbelianGroup& g, bool rings_only,
                                                           std::size_t node_limit = 50'000'000);

/// Number of heap isomorphism classes among the given multiplication tables.
std::size_t count_classes(const AbelianGroup& g, const std::vector<std::vector<Elem>>& tables, int arity);

}  // namespace heaplie
