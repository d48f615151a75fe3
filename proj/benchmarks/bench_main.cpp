#include <benchmark/benchmark.h>

#include "towerkit/holim.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/sset.hpp"

using namespace towerkit;

static void BM_SmithDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DenseMatrix m(n, n);
  // Deterministic fill with small entries and plenty of non-unit pivots.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ((i * 7 + j * 13) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).diagonal.size());
}
BENCHMARK(BM_SmithDense)->Arg(8)->Arg(16)->Arg(32);

static void BM_SkeletonHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = complex_to_sset(simplex_complex(n, 2), 3);
  for (auto _ : state) benchmark::DoNotOptimize(homology(x, 2).betti(2));
}
BENCHMARK(BM_SkeletonHomology)->Arg(5)->Arg(7)->Arg(9);

static void BM_Coskeleton(benchmark::State& state) {
  const auto s1 = complex_to_sset(cycle_graph(3));
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coskeleton(s1, 1, bound).cell_count(bound));
}
BENCHMARK(BM_Coskeleton)->Arg(2)->Arg(3)->Arg(4);

static void BM_TnEnd(benchmark::State& state) {
  const auto model = state.range(0) == 0 ? Model::poset : Model::cosimplicial;
  const auto p = T_n_problem(FunctorSpec::identity(), sphere0(), 1, model, 1);
  for (auto _ : state) benchmark::DoNotOptimize(EndResult(p, 1, Limits{}).set().cell_count(1));
}
BENCHMARK(BM_TnEnd)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
