// Throughput benchmarks for the moment engine: closed forms (the production
// path), the quadrature oracle under each assumption (the validation path),
// table discretization, and the special-function kernels.

#include "lifemoments/gompertz.hpp"
#include "lifemoments/products.hpp"
#include "lifemoments/special_fn.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lifemoments;

LifeTable window_table() {
    return LifeTable(50, {94058.0, 93563.0, 93048.0, 92500.0, 91866.0,
                          91228.0, 90450.0, 89649.0, 88868.0, 88107.0});
}

ProductSpec window_spec(int m, int j = 1) {
    ProductSpec spec;
    spec.x = 50;
    spec.l = 2;
    spec.term = 7;
    spec.m = m;
    spec.i = 0.03;
    spec.j = j;
    return spec;
}

void BM_ClosedFormTermInsurance(benchmark::State& state) {
    const LifeTable table = window_table();
    const ProductSpec spec = window_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            closed_form_moment(table, ProductKind::TermInsurance, spec).value);
    }
}
BENCHMARK(BM_ClosedFormTermInsurance)->Arg(1)->Arg(2)->Arg(4);

void BM_ClosedFormLifetime(benchmark::State& state) {
    const LifeTable table = window_table();
    const ProductSpec spec = window_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            closed_form_moment(table, ProductKind::Lifetime, spec).value);
    }
}
BENCHMARK(BM_ClosedFormLifetime)->Arg(1)->Arg(2)->Arg(4);

void BM_ClosedFormMthlyIncreasing(benchmark::State& state) {
    const LifeTable table = window_table();
    const ProductSpec spec = window_spec(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            closed_form_moment(table, ProductKind::MthlyIncreasing, spec).value);
    }
}
BENCHMARK(BM_ClosedFormMthlyIncreasing)->Arg(12)->Arg(365);

void BM_OracleTermInsurance(benchmark::State& state) {
    const LifeTable table = window_table();
    const ProductSpec spec = window_spec(2);
    const Assumption assumption = static_cast<Assumption>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            oracle_product_moment(table, assumption, ProductKind::TermInsurance,
                                  spec).value);
    }
}
BENCHMARK(BM_OracleTermInsurance)
    ->Arg(static_cast<int>(Assumption::UDD))
    ->Arg(static_cast<int>(Assumption::ConstantForce))
    ->Arg(static_cast<int>(Assumption::Balducci));

void BM_Discretize(benchmark::State& state) {
    const GompertzParams params{0.09, 0.0007};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            discretize(params, static_cast<int>(state.range(0)), 1.0));
    }
}
BENCHMARK(BM_Discretize)->Arg(140)->Arg(1000);

void BM_UpperGammaInt(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        x += 0.37;
        if (x > 30.0) {
            x -= 30.0;
        }
        benchmark::DoNotOptimize(upper_gamma_int(a, x));
    }
}
BENCHMARK(BM_UpperGammaInt)->Arg(1)->Arg(5)->Arg(15);

void BM_ExpMomentIntegral(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    double h = -2.0;
    for (auto _ : state) {
        h += 1.17;
        if (h > 520.0) {
            h = -2.0;
        }
        benchmark::DoNotOptimize(exp_moment_integral(r, h));
    }
}
BENCHMARK(BM_ExpMomentIntegral)->Arg(0)->Arg(3)->Arg(8);

} // namespace

BENCHMARK_MAIN();
