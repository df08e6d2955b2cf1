#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heaplie::symbolic {

using Integer = boost::multiprecision::cpp_int;

enum class Theory { free_heap, free_truss };

Theory parse_theory(const std::string& name);
std::string theory_name(Theory t);

/// Basis element: a generator (free heap) or a nonempty word of generators (free truss).
using Word = std::vector<std::string>;

/// Shorter words first, then lexicographic by generator name.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Coefficients = std::map<Word, Integer, WordOrder>;

/// Integer combination of basis elements with coefficient sum one; zero
/// coefficients are never stored.
class FreeElement {
 public:
  FreeElement(Theory theory, Coefficients coeffs);

  static FreeElement generator(Theory theory, const std::string& name);

  /// Alternating sum of an odd number of elements.
  static FreeElement heap_word(const std::vector<FreeElement>& terms);

  /// Bilinear product of words; only in the free truss.
  FreeElement operator*(const FreeElement& rhs) const;

  Theory theory() const noexcept { return theory_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  Integer coefficient_sum() const;

  /// Sorted "+a -b +2*c*d" form.
  std::string to_string() const;

  bool operator==(const FreeElement& o) const { return theory_ == o.theory_ && coeffs_ == o.coeffs_; }

 private:
  Theory theory_;
  Coefficients coeffs_;
};

/// Text of a coefficient map, e.g. "+a*b -b*a"; "0" when empty.
std::string format_coefficients(const Coefficients& c);

}  // namespace heaplie::symbolic
