// Serial reference against the OpenMP path for each sweep kernel.

#include <benchmark/benchmark.h>

#include <random>

#include "cuntzcf/families.hpp"
#include "cuntzcf/sweeps.hpp"

using namespace cuntzcf;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

std::vector<QuadraticSurd> pool(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<QuadraticSurd> out;
  while (out.size() < n) out.push_back(random_omega_surd(rng, {60, 20, 3, 20}));
  return out;
}

void BM_RoundTrip(benchmark::State& state) {
  std::size_t cases = 0;
  for (auto _ : state) cases += round_trip_sweep(6, 2, 3, exec_of(state)).cases;
  state.SetItemsProcessed(static_cast<std::int64_t>(cases));
}

void BM_ReverseRoundTrip(benchmark::State& state) {
  std::size_t cases = 0;
  for (auto _ : state) cases += reverse_round_trip_sweep(600, exec_of(state)).cases;
  state.SetItemsProcessed(static_cast<std::int64_t>(cases));
}

void BM_Conjugacy(benchmark::State& state) {
  const auto xs = pool(200);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_sweep(xs, 50, 5, exec_of(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * xs.size()));
}

void BM_ClassLabels(benchmark::State& state) {
  const auto xs = pool(1000);
  for (auto _ : state) benchmark::DoNotOptimize(class_labels(xs, exec_of(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * xs.size()));
}

void BM_VerifyExamples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_examples(exec_of(state)));
}

// Arg 0 is the serial reference, 1 the OpenMP path.
BENCHMARK(BM_RoundTrip)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReverseRoundTrip)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Conjugacy)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassLabels)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyExamples)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
