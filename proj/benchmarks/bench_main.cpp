#include <benchmark/benchmark.h>

#include "bergman/harmonic.hpp"
#include "bergman/hyp2f1.hpp"
#include "bergman/linearization.hpp"
#include "bergman/spectral.hpp"

namespace {

void BM_gauss_2f1_connection(benchmark::State& state) {
    std::complex<double> a{1.0, 0.6}, b{1.0, -0.6};
    for (auto _ : state) {
        auto v = bergman::gauss_2f1(a, b, 2.0, -25.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_gauss_2f1_connection);

void BM_spherical_transform(benchmark::State& state) {
    bergman::SpaceParams sp(2, 3.5, 1);
    for (auto _ : state) {
        double v = bergman::spherical_transform_quad(sp, {1.0, 0.0});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_spherical_transform);

void BM_symbol_wilson(benchmark::State& state) {
    bergman::SpaceParams sp(2, 3.5, 1);
    bergman::AuditedConstants audit{0.5, 2.0, 0.0};
    for (auto _ : state) {
        double v = bergman::symbol_wilson(sp, {1.0, 0.0}, &audit);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_symbol_wilson);

void BM_harmonic_basis(benchmark::State& state) {
    for (auto _ : state) {
        auto basis = bergman::build_harmonic_basis(2, int(state.range(0)), 1);
        benchmark::DoNotOptimize(basis.dim());
    }
}
BENCHMARK(BM_harmonic_basis)->Arg(4)->Arg(12)->Arg(24);

void BM_linearization_exact(benchmark::State& state) {
    bergman::Rational nu(7, 2);
    for (auto _ : state) {
        auto a = bergman::linearization_coeffs_exact(2, nu, 2);
        benchmark::DoNotOptimize(a.size());
    }
}
BENCHMARK(BM_linearization_exact);

} // namespace

BENCHMARK_MAIN();
