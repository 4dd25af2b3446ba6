#include <benchmark/benchmark.h>

#include "qschur/actions.hpp"
#include "qschur/sampling.hpp"
#include "qschur/suites.hpp"

namespace {

using namespace qschur;

TensorVector sample_vector(int n, int r, std::uint64_t seed) {
    Prng rng(seed);
    SampleParams params;
    params.r = r;
    params.window_lo = 1 - 2LL * n;
    params.window_hi = 3LL * n;
    return random_vector(rng, params, ScalarMode{});
}

void BM_ApplyT(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    const Session ses{n, r};
    const TensorVector v = sample_vector(n, r, 1);
    for (auto _ : state) benchmark::DoNotOptimize(apply_t(ses, 1, v));
}
BENCHMARK(BM_ApplyT)->Args({2, 2})->Args({3, 3});

void BM_ApplyTFarFromWindow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Session ses{n, 2};
    const long long gap = state.range(1);
    const TensorVector v = TensorVector::basis(ScalarMode{}, {1 - gap * n, 1 + gap * n});
    for (auto _ : state) benchmark::DoNotOptimize(apply_t(ses, 1, v));
}
BENCHMARK(BM_ApplyTFarFromWindow)->Args({2, 4})->Args({2, 16})->Args({3, 16});

void BM_ApplyEGen(benchmark::State& state) {
    const Session ses{3, 3};
    const TensorVector v = sample_vector(3, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(apply_e_gen(ses, 1, v));
}
BENCHMARK(BM_ApplyEGen);

void BM_HeckeSuite(benchmark::State& state) {
    SuiteConfig cfg;
    cfg.n = 2;
    cfg.r = 2;
    cfg.trials = 20;
    for (auto _ : state) benchmark::DoNotOptimize(verify_hecke_presentation(cfg));
}
BENCHMARK(BM_HeckeSuite)->Unit(benchmark::kMillisecond);

}  // namespace
