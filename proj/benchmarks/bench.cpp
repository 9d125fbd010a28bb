#include <benchmark/benchmark.h>

#include <symdyn/dyck.hpp>
#include <symdyn/language.hpp>
#include <symdyn/spectra.hpp>

#include "../tests/fixtures.hpp"

using namespace symdyn;

static void BM_BlockCountSft(benchmark::State& state) {
    auto gm = fixtures::golden_mean();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_blocks(gm, n));
}
BENCHMARK(BM_BlockCountSft)->Arg(32)->Arg(128)->Arg(512);

static void BM_BlockCountSofic(benchmark::State& state) {
    auto even = fixtures::even_shift();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sofic_block_count(even, n));
}
BENCHMARK(BM_BlockCountSofic)->Arg(32)->Arg(128)->Arg(512);

static void BM_GraphEntropy(benchmark::State& state) {
    auto cover = sft_to_labeled_graph(fixtures::golden_mean());
    DiGraph g = cover.underlying();
    const double tol = 1.0 / std::pow(10.0, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graph_entropy(g, tol));
}
BENCHMARK(BM_GraphEntropy)->Arg(6)->Arg(9)->Arg(12);

static void BM_DyckBlockCount(benchmark::State& state) {
    DyckSystem d;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dyck_block_count(d, n));
}
BENCHMARK(BM_DyckBlockCount)->Arg(8)->Arg(14)->Arg(20);

static void BM_GeneratorExtraction(benchmark::State& state) {
    SoficLanguage even(fixtures::even_shift());
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(extract_generators(even, Word{0}, horizon));
}
BENCHMARK(BM_GeneratorExtraction)->Arg(9)->Arg(15)->Arg(21);

BENCHMARK_MAIN();
