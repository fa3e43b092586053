#include "unisplit/cga.hpp"
#include "unisplit/dp.hpp"
#include "unisplit/gen.hpp"
#include "unisplit/interval.hpp"
#include "unisplit/oracle.hpp"
#include "unisplit/split.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace unisplit;

Instance bench_instance(int m, int bits, int n, std::uint64_t seed) {
    gen::GenSpec spec;
    spec.dist = gen::Distribution::uniform;
    spec.m = m;
    spec.bits = bits;
    spec.n = n;
    spec.seed = seed;
    return gen_random(spec);
}

void BM_cga_solve_split(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<int>(state.range(0)), 16,
                                   static_cast<int>(state.range(1)), 1);
    const int s = static_cast<int>(state.range(1)) / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cga::solve_split_cga(inst, s).makespan);
    }
}
BENCHMARK(BM_cga_solve_split)->Args({10, 3})->Args({13, 4})->Args({13, 6})->Args({15, 4});

void BM_fptas_uniminmax(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<int>(state.range(0)), 10, 3, 2);
    const Rational eps(1, state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dp::fptas_uniminmax(inst, eps).objective);
    }
}
BENCHMARK(BM_fptas_uniminmax)->Args({10, 2})->Args({10, 10})->Args({14, 2})->Args({14, 10});

void BM_decide_d(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<int>(state.range(0)), 16, 3, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interval::decide_d(inst, 1).yes);
    }
}
BENCHMARK(BM_decide_d)->Arg(20)->Arg(50)->Arg(100);

void BM_solve_split_exact(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<int>(state.range(0)), 8, 3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(split::solve_split(inst, 1).makespan);
    }
}
BENCHMARK(BM_solve_split_exact)->Arg(8)->Arg(10);

void BM_oracle(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<int>(state.range(0)), 8, 3, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::oracle_minmax_split(inst, 1).makespan);
    }
}
BENCHMARK(BM_oracle)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
