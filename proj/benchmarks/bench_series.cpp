#include <benchmark/benchmark.h>

#include "oddbounds/bounds.hpp"
#include "oddbounds/partitions.hpp"
#include "oddbounds/series.hpp"

using namespace oddbounds;

static void BM_series_mul(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = pochhammer_neg(n);
    const auto b = pochhammer_odd(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_mul(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_series_mul)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_reciprocal(benchmark::State& state)
{
    const auto odd = pochhammer_odd(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(odd.reciprocal());
    }
}
BENCHMARK(BM_reciprocal)->RangeMultiplier(2)->Range(64, 512);

static void BM_pochhammer_neg(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(pochhammer_neg(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_pochhammer_neg)->RangeMultiplier(2)->Range(128, 1024);

static void BM_expand_rational(benchmark::State& state)
{
    const auto f = prime_power_gf(9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_rational(f, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_expand_rational)->RangeMultiplier(4)->Range(64, 1024);

static void BM_qk_brute(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk_brute(static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_qk_brute)->DenseRange(40, 100, 20);

static void BM_product_enclosure(benchmark::State& state)
{
    const auto p = EvalPoint::golden(Rational(BigInt(1), BigInt(4)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enclose_distinct_product(p, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_product_enclosure)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
