#include <benchmark/benchmark.h>

#include "vaswave/diag/norms.hpp"
#include "vaswave/harness/config.hpp"
#include "vaswave/solver/scheme.hpp"
#include "vaswave/wave/field.hpp"
#include "vaswave/wave/profile.hpp"

using namespace vaswave;

namespace {

const WaveField& default_wave() {
    static const WaveField wf = [] {
        Params prm;
        return WaveField(build_profile(prm, PressureModel::quadratic(2.0, prm)));
    }();
    return wf;
}

void BM_BuildProfile(benchmark::State& state) {
    Params prm;
    const PressureModel pm = PressureModel::quadratic(2.0, prm);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_profile(prm, pm, 8.0,
                                               static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BuildProfile)->Arg(1001)->Arg(4001);

void BM_EvalWave(benchmark::State& state) {
    const WaveField& wf = default_wave();
    double x = -7.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wf.eval(x, 3.0, 1, 0));
        x += 0.001;
        if (x > 7.0) x = -7.0;
    }
}
BENCHMARK(BM_EvalWave);

void BM_SolverStep(benchmark::State& state) {
    Params prm;
    const PressureModel pm = PressureModel::quadratic(2.0, prm);
    SchemeConfig cfg;
    cfg.order = static_cast<int>(state.range(1));
    const Grid grid(-400.0, 400.0, static_cast<int>(state.range(0)));
    const Scheme scheme(grid, prm, pm, cfg);
    State s = scheme.init_state(default_wave(), {});
    const double dt = 0.9 * scheme.stable_dt(s);
    for (auto _ : state) {
        s = scheme.step(s, dt);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolverStep)->Args({8192, 1})->Args({8192, 2});

void BM_SobolevNorms(benchmark::State& state) {
    std::vector<double> f(8192);
    for (size_t i = 0; i < f.size(); ++i) f[i] = std::sin(0.01 * i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sobolev_norms(f, 0.1, 3));
    }
}
BENCHMARK(BM_SobolevNorms);

}  // namespace

BENCHMARK_MAIN();
