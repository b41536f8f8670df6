#include <benchmark/benchmark.h>

#include "adjointkit/freealg.hpp"
#include "adjointkit/pfk.hpp"
#include "adjointkit/special.hpp"

using namespace adjointkit;

namespace {

/// Deterministic series with no small pattern, so nothing cancels early.
TruncatedSeries<Rational> dense_series(int order)
{
	std::vector<Rational> c{Rational(1)};
	for (int i = 1; i <= order; ++i)
	{
		Rational v(i % 7 + 1, i % 5 + 1);
		c.push_back(i % 3 == 0 ? -v : v);
	}
	return TruncatedSeries<Rational>(std::move(c));
}

void BM_series_invert(benchmark::State &state)
{
	auto f = dense_series(static_cast<int>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(series_invert(f));
}
BENCHMARK(BM_series_invert)->Arg(16)->Arg(64)->Arg(256);

void BM_pfk_determinant(benchmark::State &state)
{
	int k = static_cast<int>(state.range(0));
	auto f = dense_series(k);
	for (auto _ : state)
		benchmark::DoNotOptimize(pfk_determinant(f, k));
}
BENCHMARK(BM_pfk_determinant)->Arg(6)->Arg(10)->Arg(14);

void BM_pfk_recursion(benchmark::State &state)
{
	int k = static_cast<int>(state.range(0));
	auto f = dense_series(k);
	for (auto _ : state)
		benchmark::DoNotOptimize(pfk_recursion(f, k));
}
BENCHMARK(BM_pfk_recursion)->Arg(6)->Arg(10)->Arg(14);

void BM_pfk_convolution(benchmark::State &state)
{
	int k = static_cast<int>(state.range(0));
	auto f = dense_series(k);
	for (auto _ : state)
		benchmark::DoNotOptimize(pfk_convolution(f, k));
}
BENCHMARK(BM_pfk_convolution)->Arg(6)->Arg(10)->Arg(14);

void BM_conjugate_series(benchmark::State &state)
{
	int N = static_cast<int>(state.range(0));
	auto f = dense_series(N);
	for (auto _ : state)
		benchmark::DoNotOptimize(conjugate_series(f, N));
}
BENCHMARK(BM_conjugate_series)->Arg(8)->Arg(16);

void BM_zk_terms(benchmark::State &state)
{
	int N = static_cast<int>(state.range(0));
	auto f = dense_series(N);
	for (auto _ : state)
		benchmark::DoNotOptimize(zk_terms(f, N));
}
BENCHMARK(BM_zk_terms)->Arg(8)->Arg(16);

void BM_hall_littlewood(benchmark::State &state)
{
	int m = static_cast<int>(state.range(0));
	int k = static_cast<int>(state.range(1));
	for (auto _ : state)
		benchmark::DoNotOptimize(hall_littlewood_Qk(m, k));
}
BENCHMARK(BM_hall_littlewood)->Args({2, 6})->Args({3, 5})->Args({4, 4});

} // namespace

BENCHMARK_MAIN();
