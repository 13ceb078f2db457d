#include <benchmark/benchmark.h>

#include "skeinmod/decompose.hpp"

using namespace skeinmod;

namespace {

const ManifoldModel& model(int which) {
  static const ManifoldModel s2 = builtin("S2xS1");
  static const ManifoldModel t3 = builtin("T3");
  return which == 0 ? s2 : t3;
}

void run(benchmark::State& state, bool parallel) {
  const ManifoldModel& M = model(static_cast<int>(state.range(0)));
  const auto alphas = enumerate_link_classes(M, state.range(1));
  for (auto _ : state) {
    auto rows = parallel ? decompose_parallel(M, alphas) : decompose_serial(M, alphas);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * alphas.size()));
  state.SetLabel(M.name + " classes=" + std::to_string(alphas.size()));
}

void BM_DecomposeSerial(benchmark::State& state) { run(state, false); }
void BM_DecomposeParallel(benchmark::State& state) { run(state, true); }

}  // namespace

BENCHMARK(BM_DecomposeSerial)->Args({0, 4})->Args({0, 6})->Args({1, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeParallel)->Args({0, 4})->Args({0, 6})->Args({1, 2})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
