#include <benchmark/benchmark.h>

#include "verlinde/finite_sector.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/theorem.hpp"
#include "verlinde/twisted_k.hpp"

namespace {

void BM_RepMul(benchmark::State& state) {
    const auto n = state.range(0);
    const auto x = verlinde::RepRingElem::irrep(n);
    const auto y = verlinde::RepRingElem::irrep(n / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RepMul)->RangeMultiplier(4)->Range(4, 256);

void BM_TwistedK(benchmark::State& state) {
    const verlinde::TwistClass twist(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verlinde::twisted_k_theory(twist));
}
BENCHMARK(BM_TwistedK)->RangeMultiplier(2)->Range(4, 66)->Unit(benchmark::kMillisecond);

void BM_FusionRing(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verlinde::build_fusion_ring(state.range(0)));
}
BENCHMARK(BM_FusionRing)->RangeMultiplier(2)->Range(4, 64);

void BM_VerifyLevel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verlinde::verify_level(state.range(0)));
}
BENCHMARK(BM_VerifyLevel)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_KGGRing(benchmark::State& state) {
    const verlinde::FiniteAbelianGroup group({2, static_cast<std::int64_t>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(verlinde::kgg_ring(group));
}
BENCHMARK(BM_KGGRing)->Arg(2)->Arg(6)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
