// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "qftalg/graphs.hpp"
#include "qftalg/laws.hpp"

using namespace qftalg;

namespace {

DegreeSequence degrees(std::vector<unsigned> d) {
  DegreeSequence s;
  for (std::size_t i = 0; i < d.size(); ++i) s.points.emplace_back("x" + std::to_string(i + 1));
  s.degrees = std::move(d);
  return s;
}

const DegreeSequence kLarge = degrees({4, 4, 4, 4, 4, 4});

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_adjacency_serial(kLarge));
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_adjacency(kLarge));
}

void BM_AntipodeLaw(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  ElementFamily f = default_family(Law::Antipode, 1, 20);
  for (auto _ : state) benchmark::DoNotOptimize(check_antipode(f, exec));
}

void BM_CoalgebraLaw(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  ElementFamily f = default_family(Law::CoalgebraDelta, 1, 20);
  for (auto _ : state) benchmark::DoNotOptimize(check_coalgebra(CoproductKind::Delta, f, exec));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AntipodeLaw)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CoalgebraLaw)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
