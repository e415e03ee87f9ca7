#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "frnet/frequency.hpp"
#include "frnet/time_domain.hpp"

namespace {

using namespace frnet;
using cd = std::complex<double>;

NetworkSpec rlc_tree() {
    NetworkSpec spec;
    spec.topology = Topology::tree;
    spec.component_a = RlcSeries{1.0, 1.0, 1.0};
    spec.component_b = RlcSeries{1.0, 1.0, 1.0};
    return spec;
}

FracPoly mixed_poly() {
    return FracPoly{{1.0, 1.5}, {-2.0, 1.0}, {0.5, 0.5},
                    {3.0, 0.0}, {1.0, -0.5}};
}

void bm_poly_multiply(benchmark::State& state) {
    const FracPoly a = mixed_poly();
    const FracPoly b = component_operator(RlcSeries{1.0, 1.0, 1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_poly_multiply);

void bm_poly_eval(benchmark::State& state) {
    const FracPoly f = mixed_poly();
    const cd s{0.3, 1.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.eval(s));
    }
}
BENCHMARK(bm_poly_eval);

void bm_quad_root(benchmark::State& state) {
    const auto eq = derive_equation(rlc_tree());
    const cd s{0.0, 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(quad_root(eq, s));
    }
}
BENCHMARK(bm_quad_root);

void bm_bode_sweep(benchmark::State& state) {
    const auto eq = derive_equation(rlc_tree());
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bode(eq, 1e-3, 1e3, points));
    }
}
BENCHMARK(bm_bode_sweep)->Arg(64)->Arg(512);

void bm_truncated_response(benchmark::State& state) {
    const NetworkSpec spec = rlc_tree();
    const cd s{0.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_response(spec, s, 60));
    }
}
BENCHMARK(bm_truncated_response);

void bm_fixed_point(benchmark::State& state) {
    const NetworkSpec spec = rlc_tree();
    const cd s{0.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fixed_point(spec, s, 1e-10, 10000));
    }
}
BENCHMARK(bm_fixed_point);

void bm_gl_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TimeSeries ts{1e-3, std::vector<double>(n)};
    for (int k = 0; k < n; ++k) ts.values[k] = 1e-3 * k;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gl_apply(ts, 0.5));
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_gl_apply)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void bm_simulate_explicit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FracPoly lop{{1.0, 0.5}};
    const TimeSeries forcing{1e-3, std::vector<double>(n, 1.0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_explicit(lop, forcing));
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_simulate_explicit)
    ->Range(256, 4096)
    ->Complexity(benchmark::oNSquared);

void bm_ilt_point(benchmark::State& state) {
    const auto F = [](cd s) { return std::pow(s, -1.5); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(ilt_point(F, 1.0));
    }
}
BENCHMARK(bm_ilt_point);

}  // namespace

BENCHMARK_MAIN();
