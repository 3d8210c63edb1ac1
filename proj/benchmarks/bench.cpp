#include <benchmark/benchmark.h>

#include "pcf/colorer.hpp"
#include "pcf/discharge.hpp"
#include "pcf/gen.hpp"
#include "pcf/patterns.hpp"
#include "pcf/solver.hpp"

using namespace pcf;

static void bm_solve_c12(benchmark::State& state) {
    Graph g = gen_cycle(12);
    ListAssignment L = uniform_lists(g, 4);
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, L));
}
BENCHMARK(bm_solve_c12);

static void bm_find_t8_girth12(benchmark::State& state) {
    Graph g = gen_girth12(5, 1).g;
    for (auto _ : state) benchmark::DoNotOptimize(find(g, "T8"));
}
BENCHMARK(bm_find_t8_girth12);

static void bm_find_any_o1p(benchmark::State& state) {
    Graph g = gen_o1p(24, 1).g;
    const auto ids = strategy_ids(Strategy::O1pDeg2);
    for (auto _ : state) benchmark::DoNotOptimize(find_any(g, ids));
}
BENCHMARK(bm_find_any_o1p);

static void bm_color_k4mf(benchmark::State& state) {
    Graph g = gen_k4mf(32, 1).g;
    ListAssignment L = degree_plus_k(g, 2, g.max_degree() + 4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(color(g, L, Strategy::K4mfDeg2));
}
BENCHMARK(bm_color_k4mf);

static void bm_discharge(benchmark::State& state) {
    Graph g;
    for (std::uint64_t seed = 0;; ++seed) {  // rules want a non-cycle instance
        g = gen_girth12(5, seed).g;
        if (!g.is_cycle()) break;
    }
    for (auto _ : state) benchmark::DoNotOptimize(run_discharging(g));
}
BENCHMARK(bm_discharge);

BENCHMARK_MAIN();
