#include <benchmark/benchmark.h>

#include "ign/assignment.hpp"
#include "ign/baselines.hpp"
#include "ign/dynamics.hpp"
#include "ign/enumerate.hpp"
#include "ign/harness.hpp"

using namespace ign;

static void BM_Normalize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = gen_gnp(n, 0.5, 1);
  Vector out(n);
  for (auto _ : state) {
    normalize_into(g.adjacency, g.weights, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Normalize)->Arg(64)->Arg(512);

static void BM_RunIgn(benchmark::State& state) {
  const auto g = gen_gnp(64, 0.5, 2);
  const auto h = Activation::power(2, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(run_ign(g.adjacency, g.weights, h));
}
BENCHMARK(BM_RunIgn);

static void BM_WgGreedy(benchmark::State& state) {
  const auto g = gen_gnp(64, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wg_greedy(g));
}
BENCHMARK(BM_WgGreedy);

static void BM_SoftassignIcn(benchmark::State& state) {
  const auto x = random_matrix(128, 4);
  const auto h = Activation::sigmoid(5);
  for (auto _ : state) {
    const auto sa = softassign(x, 0.01);
    benchmark::DoNotOptimize(run_icn(sa.matrix, h));
  }
}
BENCHMARK(BM_SoftassignIcn)->Unit(benchmark::kMillisecond);

static void BM_Hungarian(benchmark::State& state) {
  const auto x = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(hungarian(x));
}
BENCHMARK(BM_Hungarian)->Arg(16)->Arg(128);

static void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_graphs(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
