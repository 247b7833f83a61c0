#include <benchmark/benchmark.h>

#include "mstab/charts.hpp"
#include "mstab/comodule.hpp"
#include "mstab/fgl.hpp"

using namespace mstab;

static void BM_honda_gamma2(benchmark::State& state) {
    for (auto _ : state) {
        Fgl F = honda_gamma2(int(state.range(0)));
        benchmark::DoNotOptimize(F.law);
    }
}
BENCHMARK(BM_honda_gamma2)->Arg(8)->Arg(16)->Arg(24);

static void BM_fgl_associativity(benchmark::State& state) {
    Fgl F = honda_gamma2(16);
    for (auto _ : state) {
        auto bad = check_fgl_axioms(F, int(state.range(0)));
        benchmark::DoNotOptimize(bad);
    }
}
BENCHMARK(BM_fgl_associativity)->Arg(8)->Arg(12);

static void BM_o2_mul(benchmark::State& state) {
    QuatEmbedding q = find_quaternion_embedding(unsigned(state.range(0)));
    O2 acc = q.i;
    for (auto _ : state) {
        acc = acc * q.j;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_o2_mul)->Arg(8)->Arg(32);

static void BM_ttilde_profile(benchmark::State& state) {
    QuatEmbedding q = find_quaternion_embedding(8);
    AlphaPi ap = construct_alpha_pi(8);
    O2 g = ap.alpha * q.i * ap.pi;
    for (auto _ : state) {
        Profile p = ttilde_profile(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ttilde_profile);

static void BM_comodule_solve(benchmark::State& state) {
    for (auto _ : state) {
        ComoduleFamily fam = solve_comodule_family();
        benchmark::DoNotOptimize(fam.structures);
    }
}
BENCHMARK(BM_comodule_solve);

static void BM_q8_cohomology(benchmark::State& state) {
    QuatEmbedding q = find_quaternion_embedding(8);
    auto pkg = q8_package(q8_module(q, 0, 0));
    for (auto _ : state) {
        auto dims = cohomology_dims(pkg.module, int(state.range(0)));
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(BM_q8_cohomology)->Arg(2)->Arg(4);

static void BM_regularity(benchmark::State& state) {
    QuatEmbedding q = find_quaternion_embedding(8);
    GModuleSpec spec = q8_module(q, 1, 1);
    for (auto _ : state) {
        RegularityVerdict v = regularity_test(spec);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_regularity);

static void BM_regularity_certificate(benchmark::State& state) {
    for (auto _ : state) {
        Poly p = regularity_certificate();
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_regularity_certificate);

BENCHMARK_MAIN();
