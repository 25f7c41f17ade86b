#include <benchmark/benchmark.h>

#include <random>

#include "blowup/construct.hpp"

using namespace blowup;

namespace {

SearchConfig config(std::int64_t exec) {
    SearchConfig cfg;
    cfg.exec = exec == 0 ? Exec::serial : Exec::parallel;
    return cfg;
}

const char* label(std::int64_t exec) { return exec == 0 ? "serial" : "parallel"; }

// Theorem pencil q=2, d=3, n=9: 27x27 GF(2) ranks.
void BM_Theorem2Normalized(benchmark::State& state) {
    const LinearMatrix l = construct_theorem2(FieldSpec::make(2), 3, 9);
    const SearchConfig cfg = config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(blowup_rank(l, 3, SearchMode::normalized, cfg).achieved_rank);
    state.SetLabel(label(state.range(0)));
}
BENCHMARK(BM_Theorem2Normalized)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Theorem2Exhaustive(benchmark::State& state) {
    const LinearMatrix l = construct_theorem2(FieldSpec::make(2), 3, 9);
    const SearchConfig cfg = config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(blowup_rank(l, 3, SearchMode::exhaustive, cfg).achieved_rank);
    state.SetLabel(label(state.range(0)));
}
BENCHMARK(BM_Theorem2Exhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Odd characteristic goes through the generic kernel.
void BM_Theorem2GF3(benchmark::State& state) {
    const LinearMatrix l = construct_theorem2(FieldSpec::make(3), 2, 10);
    const SearchConfig cfg = config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(blowup_rank(l, 2, SearchMode::exhaustive, cfg).achieved_rank);
    state.SetLabel(label(state.range(0)));
}
BENCHMARK(BM_Theorem2GF3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
    const NcPoly f = ncpoly_parse("T1^8 - T1", FieldSpec::make(2));
    const SearchConfig cfg = config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(singular_census(f, 3, cfg).all_singular);
    state.SetLabel(label(state.range(0)));
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

MatrixFq random_gf2(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MatrixFq m(FieldSpec::make(2), n, n);
    for (auto& e : m.entries()) e = FieldElement{static_cast<std::uint32_t>(rng() & 1)};
    return m;
}

void BM_RankPacked(benchmark::State& state) {
    const MatrixFq m = random_gf2(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank_gf2(m));
}
BENCHMARK(BM_RankPacked)->Arg(32)->Arg(128)->Arg(512);

void BM_RankGeneric(benchmark::State& state) {
    const MatrixFq m = random_gf2(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank_generic(m));
}
BENCHMARK(BM_RankGeneric)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
