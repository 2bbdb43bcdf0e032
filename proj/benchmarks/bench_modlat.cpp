#include <benchmark/benchmark.h>

#include "modlat/algebra.hpp"
#include "modlat/analysis.hpp"
#include "modlat/catalog.hpp"
#include "modlat/rebuild.hpp"

using namespace modlat;

static void BM_EnumerateToy(benchmark::State& state) {
  const Poset P = catalog::toy_poset();
  const auto lines = catalog::toy_lines();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(P, lines));
}
BENCHMARK(BM_EnumerateToy);

// Invariant factors indexed by the benchmark argument.
static const std::vector<std::vector<unsigned>> kGroups{{2, 2, 2}, {4, 4}, {2, 2, 4}, {4, 8}, {9, 9}};

static void BM_SubgroupCount(benchmark::State& state) {
  const auto input = enumeration_input(Group(kGroups[static_cast<std::size_t>(state.range(0))]));
  for (auto _ : state) benchmark::DoNotOptimize(total_count(enumerate(input.poset, input.lines)));
}
BENCHMARK(BM_SubgroupCount)->DenseRange(0, 4);

static void BM_Roundtrip(benchmark::State& state) {
  const Lattice L = catalog::subgroups(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(L));
}
BENCHMARK(BM_Roundtrip)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Suite(benchmark::State& state) {
  const Lattice L = catalog::subgroups(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(L));
}
BENCHMARK(BM_Suite)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
