#include <benchmark/benchmark.h>

#include "e7lift/archimedean.hpp"
#include "e7lift/coefficients.hpp"
#include "e7lift/jordan.hpp"
#include "e7lift/lie.hpp"

using namespace e7lift;

static void BM_OctonionProduct(benchmark::State& state) {
  Octonion x, y;
  for (int i = 0; i < 8; ++i) {
    x.c[i] = Rational(i + 1, 2);
    y.c[i] = Rational(3 - i, 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_OctonionProduct);

static void BM_JordanSharp(benchmark::State& state) {
  JordanElement B = JordanElement::diag(Rational(2), Rational(3), Rational(5));
  B.c1 = Octonion::unit(1) + Octonion::unit(4);
  B.c2 = Octonion::unit(2);
  B.c3 = Octonion::unit(7);
  for (auto _ : state) benchmark::DoNotOptimize(B.sharp());
}
BENCHMARK(BM_JordanSharp);

static void BM_EnumeratePositive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_positive(state.range(0), 4));
}
BENCHMARK(BM_EnumeratePositive)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Units(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(OctonionOrder::maximal().units());
}
BENCHMARK(BM_Units)->Unit(benchmark::kMillisecond);

static void BM_CoefficientBounds(benchmark::State& state) {
  const CoeffContext ctx(load_newform(std::string(E7LIFT_BENCH_DATA) + "/newforms/11a.json"));
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(state.range(0)); ++n) {
      benchmark::DoNotOptimize(check_bound(ctx, n));
    }
  }
}
BENCHMARK(BM_CoefficientBounds)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Weights56(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler_factor(weights_56(), satake_siegel()));
}
BENCHMARK(BM_Weights56)->Unit(benchmark::kMillisecond);

static void BM_GramDet(benchmark::State& state) {
  const Hermitian2 R{Rational(3), Rational(2), Octonion::unit(1) + Octonion::unit(6)};
  for (auto _ : state) benchmark::DoNotOptimize(gram_sigma_det(R));
}
BENCHMARK(BM_GramDet)->Unit(benchmark::kMillisecond);
