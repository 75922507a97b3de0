#include <benchmark/benchmark.h>

#include "cpcount/counts.hpp"
#include "cpcount/eo.hpp"

using namespace cpcount;

static void BM_StuntedDecompose(benchmark::State& state) {
    Prime p(5);
    Int n = state.range(0);
    for (auto _ : state) {
        auto d = comod::decompose(comod::stunted_cohomology(0, n, p));
        benchmark::DoNotOptimize(d.summands.data());
    }
}
BENCHMARK(BM_StuntedDecompose)->Arg(20)->Arg(40)->Arg(80);

static void BM_TensorDualEngine(benchmark::State& state) {
    Prime p(state.range(0));
    Int r = 3 * p.value();
    Int n = r + 2 * p.value() * p.value() - p.value() - 3;
    for (auto _ : state) {
        auto g = eo::eo_neg1_cp_tensor_dcp(r, n, p);
        benchmark::DoNotOptimize(g.order_exponent());
    }
}
BENCHMARK(BM_TensorDualEngine)->Arg(3)->Arg(5)->Arg(7);

static void BM_JClosedGrid(benchmark::State& state) {
    Prime p(7);
    for (auto _ : state) {
        Int total = 0;
        for (Int r = 0; r <= 21; ++r)
            for (Int c = 1; c <= 88; ++c) total += counts::j_closed(r + c, r, p);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_JClosedGrid);

static void BM_CountBundles(benchmark::State& state) {
    Prime p(5);
    for (auto _ : state) {
        auto res = counts::count_bundles(Int("1000000000000000000"),
                                         Int("1000000000000000016"), p);
        benchmark::DoNotOptimize(res.kind);
    }
}
BENCHMARK(BM_CountBundles);

BENCHMARK_MAIN();
