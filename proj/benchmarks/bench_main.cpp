#include <benchmark/benchmark.h>

#include "qcq/capacity.hpp"
#include "qcq/queue_capacity.hpp"
#include "qcq/simulator.hpp"

namespace {

void BM_LindleySimulate(benchmark::State& state) {
    qcq::QueueModel model{qcq::Distribution::exponential(0.5),
                          qcq::Distribution::exponential(1.0)};
    for (auto _ : state) {
        auto sample = qcq::lindley_simulate(model, state.range(0), 1000, 42);
        benchmark::DoNotOptimize(sample.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LindleySimulate)->Arg(10000)->Arg(100000);

void BM_GadHolevo(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcq::gad_holevo(0.4, 0.2).chi);
    }
}
BENCHMARK(BM_GadHolevo);

void BM_CapacitySeries(benchmark::State& state) {
    auto laplace = [](double s) { return qcq::mm1_laplace(s, 0.5, 1.0); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcq::capacity_series(0.5, 0.2, laplace).capacity);
    }
}
BENCHMARK(BM_CapacitySeries);

void BM_EndToEnd(benchmark::State& state) {
    qcq::SimConfig cfg;
    cfg.spec.queue = {qcq::Distribution::exponential(0.5), qcq::Distribution::exponential(1.0)};
    cfg.spec.family = qcq::ChannelFamily::symmetric_gad(0.2);
    cfg.n_bits = state.range(0);
    cfg.seed = 42;
    for (auto _ : state) {
        auto report = qcq::run_end_to_end(cfg);
        benchmark::DoNotOptimize(report.total_flips);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EndToEnd)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
