// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the thread count.

#include <benchmark/benchmark.h>

#include "kva/blowup.hpp"
#include "kva/constants.hpp"

namespace {

const kva::Rat kDelta = kva::make_rat(178, 1000);

// (L_S, k, r) indexed by the benchmark argument
struct Case {
  kva::DivisorClass l;
  int k, r;
};
const Case kCases[] = {{{12, 12}, 2, 28}, {{19, 19}, 3, 35}, {{28, 28}, 4, 55}};

template <auto Search>
void BM_Obstruction(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  const kva::SearchOptions opts{kva::D2Formula::SquareSum, true};
  for (auto _ : state) benchmark::DoNotOptimize(Search(c.l, c.k, c.r, kDelta, opts));
}

template <auto Scan>
void BM_CMax(benchmark::State& state) {
  const kva::Rat step = kva::make_rat(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(step, 2));
}

}  // namespace

BENCHMARK(BM_Obstruction<kva::search_obstruction_serial>)->Name("obstruction/serial")->DenseRange(0, 2);
BENCHMARK(BM_Obstruction<kva::search_obstruction>)->Name("obstruction/openmp")->DenseRange(0, 2)->UseRealTime();
BENCHMARK(BM_CMax<kva::c_max_search_serial>)->Name("c_max/serial")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CMax<kva::c_max_search>)
    ->Name("c_max/openmp")
    ->Arg(100)
    ->Arg(1000)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
