#include <benchmark/benchmark.h>

#include "symarr/arrangement_homology.hpp"
#include "symarr/endspace.hpp"
#include "symarr/poset.hpp"
#include "symarr/simplicial.hpp"

namespace bm = benchmark;
using namespace symarr;

// Order complex of the face poset of the full simplex on k vertices, i.e. its
// barycentric subdivision: k! top simplices.
static void BM_BarycentricBetti(bm::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto poset = intersection_poset(Arrangement::distinct_points(SpaceModel::closed_surface(0), static_cast<int>(k), k));
    const auto complex = order_complex(poset);
    for (auto _ : state)
        bm::DoNotOptimize(betti(complex));
    std::size_t simplices = 0;
    for (int d = 0; d <= complex.dimension(); ++d)
        simplices += complex.count(d);
    state.counters["simplices"] = static_cast<double>(simplices);
}
BENCHMARK(BM_BarycentricBetti)->DenseRange(3, 6)->Unit(bm::kMillisecond);

static void BM_IntersectionPoset(bm::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto arrangement = Arrangement::distinct_points(SpaceModel::closed_surface(1), static_cast<int>(k), k);
    for (auto _ : state)
        bm::DoNotOptimize(intersection_poset(arrangement));
}
BENCHMARK(BM_IntersectionPoset)->DenseRange(3, 8);

static void BM_UnionBettiPoints(bm::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto arrangement = Arrangement::distinct_points(SpaceModel::closed_surface(2), n, k);
    for (auto _ : state)
        bm::DoNotOptimize(union_betti(arrangement));
}
BENCHMARK(BM_UnionBettiPoints)->Args({4, 4})->Args({5, 5})->Args({6, 4})->Args({6, 6})->Unit(bm::kMillisecond);

static void BM_ComplementTables(bm::State& state)
{
    const auto arrangement = Arrangement::distinct_points(SpaceModel::closed_surface(3), 5, 5);
    for (auto _ : state)
        bm::DoNotOptimize(complement_tables(arrangement));
}
BENCHMARK(BM_ComplementTables)->Unit(bm::kMillisecond);

static void BM_EndCohomologyPipeline(bm::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        bm::DoNotOptimize(end_cohomology_pipeline(4, 4, n));
}
BENCHMARK(BM_EndCohomologyPipeline)->RangeMultiplier(2)->Range(2, 32);

BENCHMARK_MAIN();
