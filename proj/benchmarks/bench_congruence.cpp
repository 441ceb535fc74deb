#include <benchmark/benchmark.h>

#include "pcong/congruence.hpp"
#include "pcong/rational_ring.hpp"

using namespace pcong;

static void BM_WorkedTable(benchmark::State& state) {
    const RationalRing ring(2);
    const auto P = MonicPoly<RationalRing>::from_display(ring, {1, 1, 3});
    const auto Q = MonicPoly<RationalRing>::from_display(ring, {1, 3, 5, 2, 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem_verdict(P, Q, IdealSpec::localized(2, Integer(1)), 16, true));
    }
}
BENCHMARK(BM_WorkedTable);

static void BM_NewtonPowerSums(benchmark::State& state) {
    const RationalRing ring(3);
    const auto Q = MonicPoly<RationalRing>::from_display(ring, {1, -4, 7, 2, -9, 5, 1});
    const auto N = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(newton_power_sums(Q, N));
}
BENCHMARK(BM_NewtonPowerSums)->Arg(16)->Arg(64)->Arg(256);

static void BM_EisensteinVerdict(benchmark::State& state) {
    const EisensteinRing ring(5, 4);
    const auto a = ring.uniformizer();
    const MonicPoly<EisensteinRing> P(ring, {a, ring.from_integer(Integer(2)), a * a, ring.one()});
    const MonicPoly<EisensteinRing> Q(ring, {a + a * a, ring.from_integer(Integer(2)), ring.zero(), ring.one() + a});
    for (auto _ : state) benchmark::DoNotOptimize(theorem_verdict(P, Q, IdealSpec::maximal(5, 4), 12));
}
BENCHMARK(BM_EisensteinVerdict);
