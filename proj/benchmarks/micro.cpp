#include <benchmark/benchmark.h>

#include "sincderiv/sweep.hpp"

using namespace sincderiv;

namespace {

void BM_JetExp(benchmark::State& state) {
    const Jet x = Jet::variable(0.7, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp(x));
    }
}
BENCHMARK(BM_JetExp)->Arg(2)->Arg(4)->Arg(8);

void BM_JetSincNearNode(benchmark::State& state) {
    const Jet u = Jet::variable(0.01, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sinc(u));
    }
}
BENCHMARK(BM_JetSincNearNode);

void BM_MapInverseJet(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(map_inverse_jet(MapId::imp4(), 3.7, 2));
    }
}
BENCHMARK(BM_MapInverseJet);

void BM_BasisTermDerivs(benchmark::State& state) {
    const MapSpec spec(MapId::imp2(), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(basis_term_derivs(spec, 2, 3, 0.5, 1.25, 2));
    }
}
BENCHMARK(BM_BasisTermDerivs);

void BM_EvaluateAllOrders(benchmark::State& state) {
    const TestFunction& fn = corpus_function(FunctionId::example1);
    const SincParams params = select_params(fn.profile_imp, static_cast<int>(state.range(0)), 2);
    const Approximant approx = build_approximant(fn.eval, MapSpec(fn.imp_map, 2), params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_all_orders(approx, 1.0));
    }
}
BENCHMARK(BM_EvaluateAllOrders)->Arg(25)->Arg(50)->Arg(100);

void BM_BuildApproximant(benchmark::State& state) {
    const TestFunction& fn = corpus_function(FunctionId::example2);
    const SincParams params = select_params(fn.profile_imp, 50, 2);
    const MapSpec spec(fn.imp_map, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_approximant(fn.eval, spec, params));
    }
}
BENCHMARK(BM_BuildApproximant);

} // namespace

BENCHMARK_MAIN();
