/**
 * @file bench_starpoly.cpp
 * @brief Throughput benchmarks for the hot paths: recurrence coefficients,
 *        exact polynomial generation, moments, zero finding and weight
 *        quadrature.
 */
#include <benchmark/benchmark.h>

#include "starpoly/moments.hpp"
#include "starpoly/weights.hpp"
#include "starpoly/zeros.hpp"

using namespace starpoly;

namespace {

FamilyParams bench_params() { return make_params(Case::C, Rat(2), Rat(3)); }

void BM_GammaTable(benchmark::State& state) {
    FamilyParams p = bench_params();
    const long n = state.range(0);
    for (auto _ : state) {
        Rat acc = 0;
        for (long k = 1; k <= n; ++k) acc += gamma(p, k);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_GammaTable)->Arg(100)->Arg(1000);

void BM_Generate(benchmark::State& state) {
    FamilyParams p = bench_params();
    const long n = state.range(0);
    for (auto _ : state) {
        auto P = generate(p, n);
        benchmark::DoNotOptimize(P.back().coeffs.data());
    }
}
BENCHMARK(BM_Generate)->Arg(30)->Arg(60)->Arg(120);

void BM_Moments(benchmark::State& state) {
    FamilyParams p = bench_params();
    const long n = state.range(0);
    for (auto _ : state) {
        MomentTable t = moments(p, n);
        benchmark::DoNotOptimize(t.u0.data());
    }
}
BENCHMARK(BM_Moments)->Arg(30)->Arg(60);

void BM_Orthogonality(benchmark::State& state) {
    FamilyParams p = bench_params();
    const long n = state.range(0);
    auto P = generate(p, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_orthogonality(p, P, n));
    }
}
BENCHMARK(BM_Orthogonality)->Arg(30)->Arg(60);

void BM_Zeros(benchmark::State& state) {
    FamilyParams p = bench_params();
    const long degree = state.range(0);
    for (auto _ : state) {
        ZeroSet z = positive_zeros(p, degree);
        benchmark::DoNotOptimize(z.positive_roots.data());
    }
}
BENCHMARK(BM_Zeros)->Arg(30)->Arg(120);

void BM_QuadratureMoment(benchmark::State& state) {
    FamilyParams p = bench_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadrature_moment(p, 1, 3));
    }
}
BENCHMARK(BM_QuadratureMoment);

void BM_WeightAiry(benchmark::State& state) {
    FamilyParams p = make_params(Case::A);
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight(p, 0, x));
        x = (x < 8.0) ? x + 0.1 : 0.1;
    }
}
BENCHMARK(BM_WeightAiry);

}  // namespace

BENCHMARK_MAIN();
