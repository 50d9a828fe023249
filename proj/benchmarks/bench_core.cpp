#include "qclif/clifford.hpp"
#include "qclif/isotropic.hpp"
#include "qclif/net.hpp"
#include "qclif/power_series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qclif;

namespace {

NetOfQuadrics random_net(uint64_t seed, const Field& f) {
    std::mt19937_64 rng(seed);
    NetOfQuadrics::Entries e{};
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            for (int m = 0; m < 3; ++m) {
                Scalar c = Scalar::of(f, static_cast<long>(rng() % f.characteristic()));
                e[i][j][m] = c;
                e[j][i][m] = c;
            }
    return NetOfQuadrics(std::move(e));
}

QuadForm triple_hyperbolic(const Field& f) {
    return direct_sum(direct_sum(QuadForm::hyperbolic(f), QuadForm::hyperbolic(f)),
                      QuadForm::hyperbolic(f));
}

} // namespace

static void BM_SeriesExpansion(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PowerSeries s = expand_rational_series({1, 3, 3, 1}, {1, -3, 3, -1}, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SeriesExpansion)->Arg(50)->Arg(200)->Arg(1000);

static void BM_IsotropicEnumeration(benchmark::State& state) {
    Field f = Field::prime(static_cast<uint32_t>(state.range(0)));
    QuadForm q = triple_hyperbolic(f);
    for (auto _ : state) {
        auto planes = enumerate_max_isotropic(q, 3);
        benchmark::DoNotOptimize(planes);
    }
}
BENCHMARK(BM_IsotropicEnumeration)->Arg(3)->Arg(5)->Arg(7);

static void BM_Discriminant(benchmark::State& state) {
    NetOfQuadrics net = random_net(7, Field::prime(11));
    for (auto _ : state) {
        MultiPoly d = discriminant(net);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Discriminant);

static void BM_BasePointScan(benchmark::State& state) {
    NetOfQuadrics net = random_net(11, Field::prime(static_cast<uint32_t>(state.range(0))));
    for (auto _ : state) {
        auto points = find_base_points(net);
        benchmark::DoNotOptimize(points);
    }
}
BENCHMARK(BM_BasePointScan)->Arg(7)->Arg(11)->Arg(13);

static void BM_CliffordBuild(benchmark::State& state) {
    Field f = Field::prime(11);
    QuadForm q = triple_hyperbolic(f);
    for (auto _ : state) {
        CliffordAlgebra cl = build_clifford(q);
        benchmark::DoNotOptimize(cl);
    }
}
BENCHMARK(BM_CliffordBuild);

static void BM_EvenCliffordReport(benchmark::State& state) {
    Field f = Field::prime(11);
    CliffordAlgebra cl = build_clifford(triple_hyperbolic(f));
    EvenClifford even = even_subalgebra(cl);
    for (auto _ : state) {
        SubAlgebraReport report = semisimplicity_report(even.algebra);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_EvenCliffordReport);

static void BM_RankProfile(benchmark::State& state) {
    Field f = Field::prime(7);
    std::mt19937_64 rng(3);
    for (uint64_t seed = 1;; ++seed) {
        NetOfQuadrics net = random_net(seed, f);
        auto points = find_base_points(net);
        if (points.empty()) continue;
        for (auto _ : state) {
            RankProfile profile = rank_profile(net, points.front());
            benchmark::DoNotOptimize(profile);
        }
        break;
    }
}
BENCHMARK(BM_RankProfile);

BENCHMARK_MAIN();
