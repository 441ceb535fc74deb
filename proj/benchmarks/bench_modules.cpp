#include <benchmark/benchmark.h>

#include <random>

#include "pcong/module_compare.hpp"
#include "pcong/multiplicity.hpp"

using namespace pcong;

namespace {

IntegerMatrix random_matrix(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    IntegerMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = dist(rng);
    }
    return m;
}

}  // namespace

static void BM_Charpoly(benchmark::State& state) {
    const IntegerMatrix M = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(M));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(16);

static void BM_SsIsomorphic(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix M = random_matrix(d, 2);
    const IntegerMatrix N = random_matrix(d, 3);
    for (auto _ : state) benchmark::DoNotOptimize(ss_isomorphic(M, N, 3));
}
BENCHMARK(BM_SsIsomorphic)->Arg(3)->Arg(6);

static void BM_InvariantFactors(benchmark::State& state) {
    const IntegerMatrix M = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_factors_mod_p(M, 5));
}
BENCHMARK(BM_InvariantFactors)->Arg(4)->Arg(8);

static void BM_RecoverMultiplicities(benchmark::State& state) {
    const GaloisRing ring = GaloisRing::with_default_modulus(3, 3, 2);
    std::map<std::uint64_t, Integer> m;
    for (std::uint64_t c = 0; c < ring.residue_size(); ++c) m[c] = Integer(static_cast<unsigned long>(c % 4));
    const auto traces = synthesize_traces(ring, m);
    for (auto _ : state) benchmark::DoNotOptimize(recover_multiplicities(traces, ring));
}
BENCHMARK(BM_RecoverMultiplicities);
