#include <benchmark/benchmark.h>

#include <vector>

#include "twoconn/formulas.hpp"
#include "twoconn/models.hpp"
#include "twoconn/multigraph.hpp"
#include "twoconn/numeric.hpp"
#include "twoconn/oracle.hpp"
#include "twoconn/rng.hpp"

using namespace twoconn;

static void BM_SolveLambda(benchmark::State& state) {
  double c = 2.0001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lambda(c));
    c = c > 40 ? 2.0001 : c * 1.01;
  }
}
BENCHMARK(BM_SolveLambda);

static void BM_LogCountMain(benchmark::State& state) {
  const ModelParams p = derive_params(100000, 150000);
  for (auto _ : state) benchmark::DoNotOptimize(log_count_main(p));
}
BENCHMARK(BM_LogCountMain);

static void BM_SamplePairing(benchmark::State& state) {
  const DegreeSequence d(std::vector<int>(static_cast<std::size_t>(state.range(0)), 3));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_pairing(d, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplePairing)->Arg(1000)->Arg(100000);

static void BM_SampleKernelConfig(benchmark::State& state) {
  const ConditionedDegreeSampler sampler(state.range(0), state.range(0) * 3 / 2);
  Rng rng(2);
  const DegreeSequence d = sampler.draw(rng, kDefaultMaxTries).degrees;
  for (auto _ : state) benchmark::DoNotOptimize(sample_kernel_config(d, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleKernelConfig)->Arg(1000)->Arg(100000);

static void BM_ConditionedAttempt(benchmark::State& state) {
  const ConditionedDegreeSampler sampler(3000, 4500);
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.count_accepted(rng, 1000));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_ConditionedAttempt);

static void BM_Predicates(benchmark::State& state) {
  const DegreeSequence d(std::vector<int>(static_cast<std::size_t>(state.range(0)), 3));
  Rng rng(4);
  const Multigraph g = sample_pairing(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_two_connected(g));
    benchmark::DoNotOptimize(is_two_edge_connected(g));
  }
}
BENCHMARK(BM_Predicates)->Arg(1000)->Arg(100000);

static void BM_ExactCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact_count(6, 9, Predicate::kTwoConnected));
}
BENCHMARK(BM_ExactCount);
BENCHMARK_MAIN();
