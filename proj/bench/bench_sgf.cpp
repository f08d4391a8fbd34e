// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "sgf/scan.hpp"
#include "sgf/toric.hpp"

namespace {

using sgf::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_Scan(benchmark::State& state) {
  const auto inputs = sgf::enumerate_semigroups(state.range(1), 3, 4);
  sgf::ScanOptions options;
  options.execution = mode(state);
  for (auto _ : state) {
    auto outcome = sgf::scan(inputs, options);
    benchmark::DoNotOptimize(outcome.records.data());
  }
  state.counters["semigroups"] = static_cast<double>(inputs.size());
}
BENCHMARK(BM_Scan)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

void BM_Mu(benchmark::State& state) {
  const sgf::NumericalSemigroup h{17, 19, 23, 29, 31};
  sgf::MuOptions options;
  options.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(sgf::mu(h, options).total);
}
BENCHMARK(BM_Mu)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MuLinearAlgebra(benchmark::State& state) {
  const sgf::NumericalSemigroup h{10, 11, 13, 14};
  const auto bound = sgf::default_degree_bound(h);
  for (auto _ : state) benchmark::DoNotOptimize(sgf::mu_by_linear_algebra(h, bound, mode(state)).size());
}
BENCHMARK(BM_MuLinearAlgebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
