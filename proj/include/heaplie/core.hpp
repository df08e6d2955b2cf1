#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heaplie {

/// Element of a finite carrier, always in 0..n-1.
using Elem = std::uint32_t;

/// A total self-map (or map between carriers), image of i at index i.
using ElementMap = std::vector<Elem>;

enum class ErrorKind {
  malformed,   // input does not have the right shape
  invalid,     // well-formed input that violates the axioms of its kind
  budget,      // search or sweep exceeds the configured limits
  hypothesis,  // construction refused because a required hypothesis fails
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;  // arguments in the axiom's argument order
  Elem lhs = 0;
  Elem rhs = 0;

  bool operator==(const Violation&) const = default;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
  bool operator==(const ViolationReport&) const = default;
};

/// Raised by constructors that validate their input and find it fails its axioms.
class InvalidStructure : public Error {
 public:
  InvalidStructure(const std::string& what, ViolationReport report)
      : Error(ErrorKind::invalid, what), report_(std::move(report)) {}
  const ViolationReport& report() const noexcept { return report_; }

 private:
  ViolationReport report_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace heaplie
