// Serial reference vs parallel kernel. Arg is the worker count; 0 = serial path.

#include <benchmark/benchmark.h>

#include "rainbow/constructions.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/triangles.hpp"

using namespace rainbow;

namespace {

void BM_Triangles(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    const ColoredGraph g = gen_random(static_cast<int>(state.range(1)), 8, 42, Completeness::complete());
    for (auto _ : state) {
        auto ts = workers == 0 ? enumerate_triangles_serial(g, true) : enumerate_triangles(g, true, workers);
        benchmark::DoNotOptimize(ts.data());
    }
}
BENCHMARK(BM_Triangles)->ArgsProduct({{0, 1, 2, 4}, {32, 64}})->Unit(benchmark::kMicrosecond);

struct CountRainbowFree {
    std::uint64_t hits = 0;
    void operator()(const ColoringState& s) { hits += s.rainbow_total() == 0; }
};

void BM_Colorings(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        std::uint64_t hits = 0;
        if (workers == 0) {
            CountRainbowFree v;
            enumerate_canonical_colorings_serial(n, v);
            hits = v.hits;
        } else {
            auto r = enumerate_canonical_colorings(n, [] { return CountRainbowFree{}; }, {}, workers);
            for (const auto& v : r.shards) hits += v.hits;
        }
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_Colorings)->ArgsProduct({{0, 1, 2, 4}, {5}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
