#include <benchmark/benchmark.h>

#include "tzfact/anomaly.hpp"
#include "tzfact/arith.hpp"
#include "tzfact/legendre.hpp"
#include "tzfact/sweep.hpp"
#include "tzfact/theta.hpp"

namespace {

using namespace tzfact;

void BM_DigitSum(benchmark::State& state) {
  const Natural n = pow(10, static_cast<Word>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(digit_sum_word(n, 7));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DigitSum)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_ToDigits(benchmark::State& state) {
  const Natural n = pow(10, static_cast<Word>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_digits(n, 6));
}
BENCHMARK(BM_ToDigits)->RangeMultiplier(4)->Range(64, 16384);

void BM_ZPower(benchmark::State& state) {
  const auto mode = state.range(1) ? LegendreMode::kCrossCheck : LegendreMode::kDigitSum;
  for (auto _ : state) benchmark::DoNotOptimize(z_power(360, static_cast<Word>(state.range(0)), mode));
}
BENCHMARK(BM_ZPower)->ArgsProduct({{10, 100, 1000}, {0, 1}});

void BM_Report(benchmark::State& state) {
  const Word k = static_cast<Word>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(report(997 * 2, k, LegendreMode::kDigitSum));
}
BENCHMARK(BM_Report)->Arg(10)->Arg(100)->Arg(1000);

void BM_Report10_9999(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(report(10, 9999, LegendreMode::kDigitSum));
}
BENCHMARK(BM_Report10_9999)->Unit(benchmark::kMillisecond);

void BM_ExpandTheta(benchmark::State& state) {
  const Word b = static_cast<Word>(state.range(0));
  const Rational t = theta(b).value;
  for (auto _ : state) benchmark::DoNotOptimize(expand_rational(t, b, Representation::kCanonical));
}
BENCHMARK(BM_ExpandTheta)->Arg(1024)->Arg(39601)->Arg(65521);

void BM_SweepBlock(benchmark::State& state) {
  SweepSpec spec;
  spec.base_lo = 900;
  spec.base_hi = 919;
  spec.ks = {KRange::Kind::kExplicit, 1, 200};
  spec.checks = {Check::kEtaBound};
  spec.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
  state.SetItemsProcessed(state.iterations() * 20 * 200);
}
BENCHMARK(BM_SweepBlock)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
