#include <benchmark/benchmark.h>

#include "symgap/distribution.hpp"
#include "symgap/geo_integrals.hpp"
#include "symgap/gnla.hpp"
#include "symgap/lie_analysis.hpp"
#include "symgap/symbol.hpp"
#include "symgap/tanaka.hpp"

using namespace symgap;

namespace {

void BM_symbol_prolongation_killing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto seq = prolongation_sequence(killing_symbol(n, 2));
        benchmark::DoNotOptimize(seq.terminated);
    }
}
BENCHMARK(BM_symbol_prolongation_killing)->Arg(2)->Arg(3)->Arg(4);

void BM_tanaka_free235(benchmark::State& state) {
    for (auto _ : state) {
        auto t = tanaka_prolongation(free_nilpotent_235());
        benchmark::DoNotOptimize(t.total_dim());
    }
}
BENCHMARK(BM_tanaka_free235);

void BM_derived_flag_power(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto d = monge_distribution(monge_power(2, n));
    for (auto _ : state) {
        auto gv = derived_flag(d);
        benchmark::DoNotOptimize(gv.saturated);
    }
}
BENCHMARK(BM_derived_flag_power)->Arg(2)->Arg(3)->Arg(4);

void BM_polynomial_symmetries_hc(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    auto d = monge_distribution(monge_hilbert_cartan());
    for (auto _ : state) {
        auto ps = polynomial_symmetries(d, cap);
        benchmark::DoNotOptimize(ps.dimension);
    }
}
BENCHMARK(BM_polynomial_symmetries_hc)->Arg(3)->Arg(4)->Arg(5);

void BM_integral_dimension_flat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    auto m = flat_metric(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_dimension(m, d));
    }
}
BENCHMARK(BM_integral_dimension_flat)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({3, 2});

void BM_integral_dimension_rotational(benchmark::State& state) {
    auto m = rotational_metric(3, 1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_dimension(m, 2));
    }
}
BENCHMARK(BM_integral_dimension_rotational);

void BM_structure_constants_perturbed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto W = perturbed_symmetries(n, 1);
    for (auto _ : state) {
        auto L = structure_constants(W);
        benchmark::DoNotOptimize(L.dim());
    }
}
BENCHMARK(BM_structure_constants_perturbed)->Arg(3)->Arg(4);

void BM_adjoint_cohomology_heisenberg(benchmark::State& state) {
    auto L = heisenberg_presentation(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chevalley_eilenberg(L, 2));
    }
}
BENCHMARK(BM_adjoint_cohomology_heisenberg);

} // namespace

BENCHMARK_MAIN();
