#include <benchmark/benchmark.h>

#include "qschur/qcomb.hpp"

namespace {

void BM_Qbinom(benchmark::State& state) {
    const long long c = state.range(0);
    const int t = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(qschur::qbinom(c, t));
}
BENCHMARK(BM_Qbinom)->Args({20, 10})->Args({40, 20})->Args({200, 6})->Args({-200, 6});

void BM_QbinomAtEps(benchmark::State& state) {
    const long long c = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(qschur::qbinom_at_eps(c, 6, 12));
}
BENCHMARK(BM_QbinomAtEps)->Arg(40)->Arg(200);

void BM_GaussExpand(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qschur::gauss_expand(m));
}
BENCHMARK(BM_GaussExpand)->Arg(10)->Arg(30);

void BM_CyclotomicPolynomial(benchmark::State& state) {
    const int lp = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qschur::cyclotomic_polynomial(lp));
}
BENCHMARK(BM_CyclotomicPolynomial)->Arg(12)->Arg(105);

}  // namespace

BENCHMARK_MAIN();
