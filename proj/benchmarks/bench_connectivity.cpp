#include <benchmark/benchmark.h>

#include "flagdom/domain.hpp"
#include "flagdom/verify.hpp"

using namespace flagdom;

static void BM_BuildDomainCI(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_domain(CIHermitian{n, n / 2}));
}
BENCHMARK(BM_BuildDomainCI)->DenseRange(2, 12, 2);

static void BM_CriterionAIII(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const DomainData dd = build_domain(AIIIHermitian{p, p, p / 2});
  for (auto _ : state) benchmark::DoNotOptimize(is_generically_one_connected(dd));
}
BENCHMARK(BM_CriterionAIII)->DenseRange(1, 8);

static void BM_OracleWKScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // a = 1 is disconnected for n >= 3, so the scan visits all of W_K.
  const DomainData dd = build_domain(CIHermitian{n, 1});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_wk_scan(dd));
}
BENCHMARK(BM_OracleWKScan)->DenseRange(3, 7);

static void BM_OracleDoubleCoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DomainData dd = build_domain(CIHermitian{n, 1});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_double_coset(dd));
}
BENCHMARK(BM_OracleDoubleCoset)->DenseRange(2, 5);

static void BM_VerifyCIGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_CI(12));
}
BENCHMARK(BM_VerifyCIGrid)->Unit(benchmark::kMillisecond);

static void BM_VerifyAIIIGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_AIII(16));
}
BENCHMARK(BM_VerifyAIIIGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
