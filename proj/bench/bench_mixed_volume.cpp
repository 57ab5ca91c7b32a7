// Serial reference against the OpenMP path for both mixed-volume engines and thmC.

#include "polydeg/builtin_examples.hpp"
#include "polydeg/degrees.hpp"
#include "polydeg/mixed_volume.hpp"
#include "polydeg/toric.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace polydeg;

namespace {

std::vector<Polytope> random_instance(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> c(0, 4);
    std::vector<Polytope> ps;
    while (ps.size() < n) {
        std::vector<IntVec> pts;
        for (std::size_t k = 0; k < n + 3; ++k) {
            IntVec v(n);
            for (auto& x : v) x = c(rng);
            pts.push_back(v);
        }
        Polytope p = convex_hull(pts, n);
        if (p.is_full_dimensional()) ps.push_back(p);
    }
    return ps;
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::Parallel : Execution::Serial; }

void BM_InclusionExclusion(benchmark::State& state) {
    auto ps = random_instance(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_inclusion_exclusion(ps, mode(state)));
}

void BM_MixedCells(benchmark::State& state) {
    auto ps = random_instance(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_cells(ps, 7, mode(state)));
}

void BM_CubicThmA(benchmark::State& state) {
    SparseProblem p = examples::cubic_constraint_linear_objective(static_cast<std::size_t>(state.range(0)));
    DegreeOptions opts;
    opts.execution = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(algdeg_thmA(p, opts));
}

void BM_QuadricThmC(benchmark::State& state) {
    SparseProblem p = examples::quadric_pair_off_orthant();
    for (auto _ : state) benchmark::DoNotOptimize(thmC_degree(p));
}

}  // namespace

// second argument: 0 serial, 1 parallel
BENCHMARK(BM_InclusionExclusion)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixedCells)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubicThmA)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadricThmC)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
