#include "poisson/cohomology.hpp"
#include "poisson/lie_registry.hpp"
#include "poisson/poisson_complex.hpp"
#include "poisson/verification.hpp"

#include <benchmark/benchmark.h>

using namespace poisson;

namespace {

AlgebraKind kind_for(int index)
{
    switch (index) {
    case 0: return AlgebraKind(AlgebraTag::heisenberg);
    case 1: return AlgebraKind::parse("book", "-2/3");
    case 2: return AlgebraKind(AlgebraTag::so3);
    default: return AlgebraKind(AlgebraTag::euclidean);
    }
}

void BM_CohomologyTable(benchmark::State& state)
{
    const AlgebraKind kind = kind_for(static_cast<int>(state.range(0)));
    const int dmax = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_table(kind, dmax));
    state.SetLabel(kind.label());
}
BENCHMARK(BM_CohomologyTable)->ArgsProduct({{0, 1, 2, 3}, {6, 10, 12}})->Unit(benchmark::kMillisecond);

void BM_DifferentialMatrix(benchmark::State& state)
{
    const MultiVector pi = linear_poisson(AlgebraKind(AlgebraTag::so3));
    const int q = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(differential_matrix(pi, q, d));
}
BENCHMARK(BM_DifferentialMatrix)->ArgsProduct({{0, 1, 2}, {4, 8, 12}})->Unit(benchmark::kMicrosecond);

void BM_RankKernel(benchmark::State& state)
{
    const MultiVector pi = linear_poisson(AlgebraKind(AlgebraTag::so3));
    const SparseMatrix m = differential_matrix(pi, 1, static_cast<int>(state.range(0))).matrix;
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_kernel(m));
    state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_RankKernel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_InvariantCohomology(benchmark::State& state)
{
    const MultiVector pi = linear_poisson(AlgebraKind(AlgebraTag::euclidean));
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int q = 0; q <= 3; ++q)
            benchmark::DoNotOptimize(invariant_cohomology(pi, q, d));
}
BENCHMARK(BM_InvariantCohomology)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state)
{
    const auto ids = known_ids();
    for (auto _ : state)
        for (const auto& id : ids)
            benchmark::DoNotOptimize(verify(id, 12));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
