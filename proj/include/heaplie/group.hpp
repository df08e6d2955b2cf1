#pragma once

#include <span>
#include <string>
#include <vector>

#include "heaplie/core.hpp"

namespace heaplie {

inline constexpr std::size_t kMaxGroupOrder = 256;

/// Finite abelian group on 0..n-1 with dense addition table.
///
/// Groups built from cyclic factor orders use mixed-radix encoding with the
/// last factor least significant: in Z2xZ3, element (d0, d1) is d0 * 3 + d1.
/// Groups built from a raw table keep the table's labels and have no factor
/// list; their zero may be any element.
class AbelianGroup {
 public:
  /// Direct product of cyclic groups Z_{orders[0]} x ... ; every order >= 2.
  /// An empty list gives the trivial group.
  static AbelianGroup cyclic_product(std::vector<int> orders);

  /// Validates closure, identity, inverses, commutativity and associativity.
  /// Throws InvalidStructure (with the report) or Error(malformed).
  static AbelianGroup from_table(std::size_t n, std::vector<Elem> add, Elem zero);

  static ViolationReport validate_table(std::size_t n, std::span<const Elem> add, Elem zero);

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem times(Elem a, long long k) const noexcept;

  /// Cyclic factor orders, empty for table-defined groups.
  const std::vector<int>& orders() const noexcept { return orders_; }
  bool has_basis() const noexcept { return !orders_.empty() || n_ == 1; }

  std::vector<int> digits(Elem a) const;
  Elem encode(std::span<const int> digits) const;

  /// Standard generators of a cyclic product (unit vectors), in factor order.
  std::vector<Elem> basis() const;

  /// Additive order of an element.
  int element_order(Elem a) const;
  /// Exponent of the group (lcm of element orders).
  int exponent() const;

  const std::vector<Elem>& add_table() const noexcept { return add_; }

  /// All additive self-maps, in deterministic order. Throws Error(budget) past `limit`.
  std::vector<ElementMap> endomorphisms(std::size_t limit = 1u << 20) const;
  std::vector<ElementMap> automorphisms(std::size_t limit = 1u << 20) const;

  std::string describe() const;

  bool operator==(const AbelianGroup& o) const { return n_ == o.n_ && zero_ == o.zero_ && add_ == o.add_; }

 private:
  std::size_t n_ = 1;
  Elem zero_ = 0;
  std::vector<int> orders_;
  std::vector<Elem> add_{0};
  std::vector<Elem> neg_{0};
};

/// Parses "Z2", "Z2xZ2", "Z4xZ2" (also "Z2+Z2", case-insensitive x).
AbelianGroup parse_group_spec(const std::string& spec);

bool is_additive(const AbelianGroup& g, std::span<const Elem> f);

}  // namespace heaplie
