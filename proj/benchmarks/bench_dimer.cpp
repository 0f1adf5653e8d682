// bench_dimer.cpp — micro-benchmarks for the hot paths: rates, generator
// assembly, adaptive propagation, kernel steady state, Wootters concurrence,
// and a full 501-point transfer curve.

#include <benchmark/benchmark.h>

#include <numbers>

#include "dimer/concurrence.hpp"
#include "dimer/density_matrix.hpp"
#include "dimer/integrate.hpp"
#include "dimer/liouvillian.hpp"
#include "dimer/model.hpp"
#include "dimer/steady.hpp"
#include "dimer/transfer.hpp"
#include "dimer/wootters.hpp"

namespace {

dimer::DimerParams reference_params() {
    dimer::DimerParams p = dimer::DimerParams::with_mixing_angle(0.3 * std::numbers::pi, 5.0);
    p.eta1 = p.eta2 = 0.005;
    p.set_temperatures(10.0);
    return p;
}

void BM_EffectiveRates(benchmark::State& state) {
    const dimer::DimerParams p = reference_params();
    for (auto _ : state) {
        const dimer::Eigensystem eig = dimer::eigensystem(p);
        benchmark::DoNotOptimize(dimer::effective_rates(p, eig));
    }
}
BENCHMARK(BM_EffectiveRates);

void BM_BuildLiouvillian(benchmark::State& state) {
    const dimer::DimerParams p = reference_params();
    for (auto _ : state) benchmark::DoNotOptimize(dimer::build_liouvillian(p));
}
BENCHMARK(BM_BuildLiouvillian);

void BM_PropagateT10(benchmark::State& state) {
    const dimer::DimerParams p = reference_params();
    const dimer::Liouvillian lio = dimer::build_liouvillian(p);
    const dimer::DensityMatrix rho0 = dimer::DensityMatrix::donor_excited();
    for (auto _ : state) benchmark::DoNotOptimize(dimer::propagate(rho0, lio, 10.0));
}
BENCHMARK(BM_PropagateT10);

void BM_KernelSteadyState(benchmark::State& state) {
    const dimer::DimerParams p = reference_params();
    const dimer::Liouvillian lio = dimer::build_liouvillian(p);
    const dimer::DensityMatrix rho0 = dimer::DensityMatrix::donor_excited();
    for (auto _ : state) benchmark::DoNotOptimize(dimer::steady_state(lio, rho0));
}
BENCHMARK(BM_KernelSteadyState);

void BM_WoottersConcurrence(benchmark::State& state) {
    const dimer::DimerParams p = reference_params();
    const dimer::Liouvillian lio = dimer::build_liouvillian(p);
    const dimer::DensityMatrix rho =
        dimer::propagate(dimer::DensityMatrix::donor_excited(), lio, 0.37)
            .in_basis(dimer::Basis::Bare, lio.eig.theta);
    for (auto _ : state) benchmark::DoNotOptimize(dimer::wootters_concurrence(rho));
}
BENCHMARK(BM_WoottersConcurrence);

void BM_TransferCurve501(benchmark::State& state) {
    const dimer::DimerParams p = reference_params();
    for (auto _ : state) {
        double sum = 0.0;
        for (int i = 0; i < 501; ++i) sum += dimer::transfer_probability(i * (10.0 / 500.0), p);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_TransferCurve501);

}  // namespace

BENCHMARK_MAIN();
