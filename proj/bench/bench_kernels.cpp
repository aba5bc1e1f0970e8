#include "opgraph/free_graphs.hpp"
#include "opgraph/operads.hpp"

#include <benchmark/benchmark.h>

using namespace opgraph;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_HookSeriesFree(benchmark::State& state) {
    auto g = make_free_graphs(Alphabet::parse("a:2,c:3"));
    hook_series_up_to(g.u, 5, Exec::parallel);
    for (auto _ : state) benchmark::DoNotOptimize(hook_series_up_to(g.u, 5, exec_of(state)));
}

void BM_HookSeriesMotz(benchmark::State& state) {
    auto g = make_operad_graphs(make_motz());
    hook_series_up_to(g.u, 7, Exec::parallel);
    for (auto _ : state) benchmark::DoNotOptimize(hook_series_up_to(g.u, 7, exec_of(state)));
}

void BM_DualityFree(benchmark::State& state) {
    auto g = make_free_graphs(Alphabet::parse("a:2,c:3"));
    PhiFn<Tree> phi = [](const Tree& t) { return phi_free(t); };
    check_phi_diagonal(g.uv_pair(), phi, 4, Exec::parallel);
    for (auto _ : state) benchmark::DoNotOptimize(check_phi_diagonal(g.uv_pair(), phi, 4, exec_of(state)));
}

void BM_DualityFCat(benchmark::State& state) {
    auto op = make_fcat(2);
    auto g = make_operad_graphs(op);
    PhiFn<Word> phi = [&](const Word& x) { return op->phi(x); };
    check_phi_diagonal(g.uv_pair(), phi, 5, Exec::parallel);
    for (auto _ : state) benchmark::DoNotOptimize(check_phi_diagonal(g.uv_pair(), phi, 5, exec_of(state)));
}

}  // namespace

// Argument 0 is the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_HookSeriesFree)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HookSeriesMotz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualityFree)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualityFCat)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
