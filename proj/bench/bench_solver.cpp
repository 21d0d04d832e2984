// Serial reference vs OpenMP kernels. Thread count comes from the second benchmark argument.
#include <benchmark/benchmark.h>

#include <map>

#include "cdc/constructions.hpp"
#include "cdc/families.hpp"
#include "cdc/harness.hpp"
#include "cdc/solver.hpp"

using namespace cdc;

namespace {

const Graph& antiprism_graph(int k) {
  static std::map<int, AntiprismLayout> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, gen_antiprism(k)).first;
  return it->second.graph();
}

void BM_CountSerial(benchmark::State& state) {
  const Graph& g = antiprism_graph(static_cast<int>(state.range(0)));
  const int k = g.vertex_count() + 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_cdcs_serial(g, k, false));
}

void BM_CountParallel(benchmark::State& state) {
  const Graph& g = antiprism_graph(static_cast<int>(state.range(0)));
  SolverOptions o;
  o.workers = static_cast<int>(state.range(1));
  const int k = g.vertex_count() + 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_cdcs(g, k, false, o));
}

void BM_CyclesSerial(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles_serial(g, 2, g.vertex_count()).cycles.size());
}

void BM_CyclesParallel(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(g, 2, g.vertex_count(), workers).cycles.size());
}

void BM_MinCdcJoin(benchmark::State& state) {
  const Graph g = petersen_chain(2);
  SolverOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_cdc(g, false, o)->size);
}

void BM_CensusReference(benchmark::State& state) {
  const Graph g = complete_graph(6);
  for (auto _ : state) benchmark::DoNotOptimize(reference_cdc_counts(g, 6).size());
}

void BM_CensusSolver(benchmark::State& state) {
  const Graph g = complete_graph(6);
  SolverOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cdc_census(g, 6, o).counts.size());
}

}  // namespace

BENCHMARK(BM_CountSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Args({5, 2})->Args({6, 2})->Args({6, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CyclesSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclesParallel)->Args({7, 2})->Args({8, 2})->Args({8, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MinCdcJoin)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSolver)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
