#include "heaplie/symbolic/free_element.hpp"

#include "heaplie/core.hpp"

namespace heaplie::symbolic {

Theory parse_theory(const std::string& name) {
  if (name == "free-heap" || name == "heap") return Theory::free_heap;
  if (name == "free-truss" || name == "truss") return Theory::free_truss;
  throw Error(ErrorKind::malformed, "unknown theory '" + name + "' (free-heap or free-truss)");
}

std::string theory_name(Theory t) { return t == Theory::free_heap ? "free-heap" : "free-truss"; }

FreeElement::FreeElement(Theory theory, Coefficients coeffs) : theory_(theory), coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

FreeElement FreeElement::generator(Theory theory, const std::string& name) {
  return FreeElement(theory, Coefficients{{Word{name}, Integer(1)}});
}

FreeElement FreeElement::heap_word(const std::vector<FreeElement>& terms) {
  require(!terms.empty() && terms.size() % 2 == 1, ErrorKind::malformed, "heap words have odd length");
  Coefficients acc;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool plus = i % 2 == 0;
    for (const auto& [w, c] : terms[i].coeffs_) {
      auto& slot = acc[w];
      if (plus)
        slot += c;
      else
        slot -= c;
    }
  }
  return FreeElement(terms.front().theory_, std::move(acc));
}

FreeElement FreeElement::operator*(const FreeElement& rhs) const {
  require(theory_ == Theory::free_truss && rhs.theory_ == Theory::free_truss, ErrorKind::malformed,
          "multiplication is only defined in the free truss");
  Coefficients acc;
  for (const auto& [u, cu] : coeffs_)
    for (const auto& [v, cv] : rhs.coeffs_) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      acc[std::move(uv)] += cu * cv;
    }
  return FreeElement(theory_, std::move(acc));
}

Integer FreeElement::coefficient_sum() const {
  Integer s = 0;
  for (const auto& kv : coeffs_) s += kv.second;
  return s;
}

std::string format_coefficients(const Coefficients& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [w, k] : c) {
    if (!out.empty()) out += ' ';
    out += k < 0 ? '-' : '+';
    const Integer mag = k < 0 ? Integer(-k) : k;
    if (mag != 1) out += mag.str() + "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += '*';
      out += w[i];
    }
  }
  return out;
}

std::string FreeElement::to_string() const { return format_coefficients(coeffs_); }

}  // namespace heaplie::symbolic
