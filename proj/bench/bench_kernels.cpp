// Serial reference vs OpenMP paths of the grid kernels.

#include <benchmark/benchmark.h>

#include "pqapprox/kernels.hpp"
#include "pqapprox/moduli.hpp"
#include "pqapprox/operators.hpp"

using namespace pqapprox;

namespace {

const PqParams kStd(0.5, 0.4);

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp x" + std::to_string(parallel_thread_count()));
}

void BM_DurrmeyerGrid(benchmark::State& state) {
  const DurrmeyerOperator op(FunctionSpec::builtin("sinmix"), static_cast<int>(state.range(1)), kStd);
  const auto xs = uniform_grid(0.0, 1.0, 1001);
  const auto fn = [&](double x) { return op(x); };
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_on_grid(fn, xs, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
  label(state);
}
BENCHMARK(BM_DurrmeyerGrid)->ArgsProduct({{0, 1}, {15, 100}})->Unit(benchmark::kMillisecond);

void BM_KingGrid(benchmark::State& state) {
  const KingOperator op(FunctionSpec::builtin("quad"), 50, kStd);
  const auto xs = uniform_grid(0.0, king_interval_end(50, kStd), 1001);
  const auto fn = [&](double x) { return op(x); };
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_on_grid(fn, xs, mode(state)));
  label(state);
}
BENCHMARK(BM_KingGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SecondModulus(benchmark::State& state) {
  const auto f = FunctionSpec::builtin("sinmix");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        empirical_second_modulus(f, 0.25, 1024, SecondDifference::standard, mode(state)));
  label(state);
}
BENCHMARK(BM_SecondModulus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Modulus(benchmark::State& state) {
  const auto f = FunctionSpec::builtin("sinmix");
  for (auto _ : state) benchmark::DoNotOptimize(empirical_modulus(f, 0.25, 1024, mode(state)));
  label(state);
}
BENCHMARK(BM_Modulus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
