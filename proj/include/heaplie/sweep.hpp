#pragma once

// Exhaustive quantifier sweeps. Every validator is a sequence of sweeps over
// a leading index; the serial kernel is the reference, the OpenMP kernel must
// return exactly the same witnesses in the same order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <vector>

#include <omp.h>

#include "heaplie/core.hpp"

namespace heaplie {

enum class Execution { serial, parallel };

struct SweepOptions {
  bool collect_all = false;          // false: stop at the first witness
  std::size_t max_witnesses = 100;   // cap when collect_all is set
  Execution execution = Execution::parallel;
  int workers = 0;                   // 0: OpenMP default

  std::size_t cap() const { return collect_all ? std::max<std::size_t>(max_witnesses, 1) : 1; }

  static SweepOptions serial() {
    SweepOptions o;
    o.execution = Execution::serial;
    return o;
  }
  static SweepOptions all(std::size_t cap = 100) {
    SweepOptions o;
    o.collect_all = true;
    o.max_witnesses = cap;
    return o;
  }
};

/// Bounded witness collector handed to sweep bodies.
class WitnessSink {
 public:
  explicit WitnessSink(std::size_t cap) : cap_(cap) {}

  bool full() const noexcept { return found_.size() >= cap_; }

  /// Records a violation; returns true when the sink is full afterwards.
  bool add(Violation v) {
    if (!full()) found_.push_back(std::move(v));
    return full();
  }

  std::vector<Violation>& found() noexcept { return found_; }

 private:
  std::size_t cap_;
  std::vector<Violation> found_;
};

/// Reference kernel: leads in increasing order, stops once `cap` witnesses exist.
template <class Body>
std::vector<Violation> sweep_serial(std::size_t lead_count, std::size_t cap, Body&& body) {
  std::vector<Violation> out;
  for (std::size_t lead = 0; lead < lead_count && out.size() < cap; ++lead) {
    WitnessSink sink(cap - out.size());
    body(static_cast<Elem>(lead), sink);
    for (auto& v : sink.found()) out.push_back(std::move(v));
  }
  return out;
}

/// OpenMP kernel partitioned by the leading index. A lead that alone fills the
/// cap makes every later lead irrelevant, so those are skipped; the merge is by
/// lead order, which keeps the result identical to sweep_serial.
template <class Body>
std::vector<Violation> sweep_parallel(std::size_t lead_count, std::size_t cap, int workers, Body&& body) {
  std::vector<std::vector<Violation>> per_lead(lead_count);
  std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lead_count); ++i) {
    const auto lead = static_cast<std::size_t>(i);
    if (lead > cutoff.load(std::memory_order_relaxed)) continue;
    WitnessSink sink(cap);
    body(static_cast<Elem>(lead), sink);
    if (sink.full()) {
      std::size_t cur = cutoff.load(std::memory_order_relaxed);
      while (lead < cur && !cutoff.compare_exchange_weak(cur, lead)) {
      }
    }
    per_lead[lead] = std::move(sink.found());
  }

  std::vector<Violation> out;
  for (auto& found : per_lead) {
    for (auto& v : found) {
      if (out.size() >= cap) return out;
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <class Body>
std::vector<Violation> sweep(std::size_t lead_count, std::size_t cap, const SweepOptions& opt, Body&& body) {
  if (opt.execution == Execution::serial || lead_count < 2)
    return sweep_serial(lead_count, cap, std::forward<Body>(body));
  return sweep_parallel(lead_count, cap, opt.workers, std::forward<Body>(body));
}

/// Runs a validator's axioms in order, sharing one witness budget.
class ReportBuilder {
 public:
  explicit ReportBuilder(const SweepOptions& opt) : opt_(opt) {}

  bool done() const { return report_.violations.size() >= opt_.cap(); }

  template <class Body>
  ReportBuilder& run(std::size_t lead_count, Body&& body) {
    if (done()) return *this;
    auto found = sweep(lead_count, opt_.cap() - report_.violations.size(), opt_, std::forward<Body>(body));
    for (auto& v : found) report_.violations.push_back(std::move(v));
    return *this;
  }

  void append(const ViolationReport& other) {
    for (const auto& v : other.violations) {
      if (done()) return;
      report_.violations.push_back(v);
    }
  }

  const SweepOptions& options() const { return opt_; }
  ViolationReport take() { return std::move(report_); }

 private:
  SweepOptions opt_;
  ViolationReport report_;
};

}  // namespace heaplie
