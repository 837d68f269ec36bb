#include "hexspan/coloring.hpp"
#include "hexspan/reuse.hpp"

#include <benchmark/benchmark.h>

using namespace hexspan;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void distance_closed_sweep(benchmark::State& state)
{
    const auto pts = ball({0, 0}, 20);
    for (auto _ : state) {
        long long sum = 0;
        for (Vertex a : pts)
            for (Vertex b : pts)
                sum += distance_closed(a, b);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(pts.size() * pts.size()));
}

void distance_bfs_sweep(benchmark::State& state)
{
    const auto pts = ball({0, 0}, 6);
    for (auto _ : state) {
        long long sum = 0;
        for (Vertex a : pts)
            for (Vertex b : pts)
                sum += distance_bfs(a, b);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(pts.size() * pts.size()));
}

void clique_pair_check(benchmark::State& state)
{
    label(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_observation_4(static_cast<int>(state.range(1)), mode(state)));
}

void shell_spread_sweep(benchmark::State& state)
{
    label(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_shell_reuse_all(static_cast<int>(state.range(1)), mode(state)));
}

void single_coset_scan(benchmark::State& state)
{
    label(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(search_lattice(static_cast<int>(state.range(1)), 120, mode(state)));
}

void multi_domain_search(benchmark::State& state)
{
    label(state);
    const int l = static_cast<int>(state.range(1));
    const int colors = l == 8 ? 33 : 48;
    for (auto _ : state)
        benchmark::DoNotOptimize(search_multi_domain(l, colors, {2, 2'000'000, mode(state)}));
}

} // namespace

BENCHMARK(distance_closed_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(distance_bfs_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(clique_pair_check)->ArgsProduct({{0, 1}, {6, 10}})->Unit(benchmark::kMillisecond);
BENCHMARK(shell_spread_sweep)->ArgsProduct({{0, 1}, {9, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK(single_coset_scan)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);
BENCHMARK(multi_domain_search)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
