#include <benchmark/benchmark.h>

#include "pcong/series.hpp"
#include "pcong/symfunc.hpp"

using namespace pcong;

static void BM_EnumeratePartitions(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(10)->Arg(20)->Arg(30);

static void BM_PInEBasis(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(p_in_e_basis(n));
}
BENCHMARK(BM_PInEBasis)->Arg(8)->Arg(12)->Arg(16);

static void BM_GLambdaToE(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const Partition lambda(std::vector<std::uint64_t>(n, 1));
    for (auto _ : state) benchmark::DoNotOptimize(convert(g_lambda(lambda, 2), Basis::elementary));
}
BENCHMARK(BM_GLambdaToE)->Arg(6)->Arg(9)->Arg(12);

static void BM_ArtinHasse(benchmark::State& state) {
    const auto method = state.range(0) == 0 ? ArtinHasseMethod::exponential : ArtinHasseMethod::product;
    for (auto _ : state) benchmark::DoNotOptimize(artin_hasse(3, 50, method));
}
BENCHMARK(BM_ArtinHasse)->Arg(0)->Arg(1);
