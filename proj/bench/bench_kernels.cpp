// Serial reference against the OpenMP kernels. Arguments are worker counts;
// 0 selects the serial sweep.

#include <benchmark/benchmark.h>

#include "heaplie/search.hpp"

using namespace heaplie;

namespace {

LieTernary componentwise_bracket() {
  const auto g = AbelianGroup::cyclic_product({3, 3, 3});
  std::vector<Elem> mul(27 * 27);
  for (Elem a = 0; a < 27; ++a)
    for (Elem b = 0; b < 27; ++b) {
      const auto x = g.digits(a), y = g.digits(b);
      mul[a * 27 + b] = g.encode(std::vector<int>{x[0] * y[0] % 3, x[1] * y[1] % 3, x[2] * y[2] % 3});
    }
  return bracket_from_truss(truss_from_ring(g, mul));
}

SweepOptions options(int workers) {
  SweepOptions o;
  if (workers == 0) {
    o.execution = Execution::serial;
  } else {
    o.execution = Execution::parallel;
    o.workers = workers;
  }
  return o;
}

void StrongJacobi27(benchmark::State& st) {
  const auto l = componentwise_bracket();
  const auto opt = options(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(validate_strong_jacobi(l, opt));
  st.SetItemsProcessed(st.iterations() * 27LL * 27 * 27 * 27 * 27);
}
BENCHMARK(StrongJacobi27)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void LieTruss27(benchmark::State& st) {
  const auto l = componentwise_bracket();
  const auto opt = options(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(validate_lie_truss(l, opt));
}
BENCHMARK(LieTruss27)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void EnumerateTrussesZ3xZ3(benchmark::State& st) {
  SearchSpec s;
  s.group = AbelianGroup::cyclic_product({3, 3});
  s.up_to_iso = true;
  s.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_trusses(s));
}
BENCHMARK(EnumerateTrussesZ3xZ3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void EnumerateLieKleinFour(benchmark::State& st) {
  SearchSpec s;
  s.group = AbelianGroup::cyclic_product({2, 2});
  s.kind = SearchKind::lie_truss;
  s.up_to_iso = true;
  s.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_lie_brackets(s));
}
BENCHMARK(EnumerateLieKleinFour)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
