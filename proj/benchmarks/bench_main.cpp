#include <benchmark/benchmark.h>

#include <random>

#include "logbps/localization.hpp"
#include "logbps/q_series.hpp"

using namespace logbps;

static void BM_McLocalization(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        LocalizationReport report = mc_localization(d);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_McLocalization)->Arg(5)->Arg(10)->Arg(15)->Arg(20)->Arg(25);

static void BM_BpsRoundTrip(benchmark::State& state)
{
    const int levels = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> value(-50, 50);
    RayTable bps{3, TableKind::BPS, {}};
    for (int n = 0; n < levels; ++n) bps.values.push_back(Rational(value(rng)));
    for (auto _ : state) {
        BpsInversion inv = bps_from_gw(gw_from_bps(bps));
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_BpsRoundTrip)->Arg(12)->Arg(48)->Arg(96);

static void BM_FitLaurent(benchmark::State& state)
{
    const int span = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> value(-20, 20);
    std::vector<Rational> pairs(static_cast<std::size_t>(span));
    for (auto& c : pairs) c = Rational(value(rng));
    const SymmetricLaurent L(Rational(value(rng)), std::move(pairs));
    const Rational lambda(1, 2);
    const EvenSeries series = laurent_to_series(L, lambda, 2 * span + 4);
    for (auto _ : state) {
        LaurentFit fit = fit_laurent(series, lambda, span);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitLaurent)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
