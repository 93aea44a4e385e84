#include <benchmark/benchmark.h>

#include "monodyn/finite_field.hpp"
#include "monodyn/function_field.hpp"
#include "monodyn/graph_engine.hpp"
#include "monodyn/mean_values.hpp"
#include "monodyn/monomial_formulas.hpp"
#include "monodyn/numtheory.hpp"

namespace {

namespace ff = monodyn::ff;
namespace fm = monodyn::formulas;
namespace graph = monodyn::graph;
using u64 = std::uint64_t;

// Field order from the benchmark argument, as p^s.
void BM_BuildGraph(benchmark::State& state) {
  const auto field = ff::make_field(static_cast<u64>(state.range(0)),
                                    static_cast<unsigned>(state.range(1)));
  const graph::DynSystem sys(field, 3);
  for (auto _ : state) benchmark::DoNotOptimize(graph::build(sys));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(field.q()));
}
BENCHMARK(BM_BuildGraph)
    ->Args({1009, 1})
    ->Args({65521, 1})
    ->Args({2, 16})
    ->Args({3, 10})
    ->Args({2, 20})
    ->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const fm::FieldOrder q(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fm::profile(q, 3));
}
BENCHMARK(BM_Profile)->Arg(7)->Arg(65537)->Arg(2147483647);

void BM_Factorize(benchmark::State& state) {
  const u64 m = 4611686014132420609ULL;  // (2^31 - 1)^2
  for (auto _ : state) benchmark::DoNotOptimize(monodyn::nt::factorize(m));
}
BENCHMARK(BM_Factorize);

void BM_PrimeSweep(benchmark::State& state) {
  monodyn::mean::SweepOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monodyn::mean::empirical_mean(2, 1, 3, static_cast<u64>(state.range(0)), opts));
  }
}
BENCHMARK(BM_PrimeSweep)->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

void BM_Oscillation(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monodyn::ffield::oscillation_experiment(3, 5, static_cast<u64>(state.range(0))));
  }
}
BENCHMARK(BM_Oscillation)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
