#include <benchmark/benchmark.h>

#include "planalg/haagerup.hpp"
#include "planalg/oracle.hpp"

using namespace planalg;

namespace {

const SpinContextPtr& haagerup() {
    static const SpinContextPtr ctx = SpinContext::create(haagerup_graph());
    return ctx;
}

const GeneratorCandidate& generator() {
    static const GeneratorCandidate c = find_generator(haagerup());
    return c;
}

void BM_GraphNorm(benchmark::State& state) {
    const BipartiteGraph g = haagerup_graph();
    for (auto _ : state) benchmark::DoNotOptimize(graph_norm(g));
}
BENCHMARK(BM_GraphNorm)->Unit(benchmark::kMillisecond);

void BM_JonesWenzl(benchmark::State& state) {
    const Scalar delta = haagerup()->delta();
    for (auto _ : state) benchmark::DoNotOptimize(jones_wenzl(static_cast<std::size_t>(state.range(0)), delta));
}
BENCHMARK(BM_JonesWenzl)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RandomMultiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const GpaElement x = random_element(haagerup(), n, Shading::plus, rng);
    const GpaElement y = random_element(haagerup(), n, Shading::plus, rng);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(x, y));
}
BENCHMARK(BM_RandomMultiply)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GeneratorSquare(benchmark::State& state) {
    const GpaElement& t = generator().element;
    for (auto _ : state) benchmark::DoNotOptimize(multiply(t, t));
}
BENCHMARK(BM_GeneratorSquare)->Unit(benchmark::kMillisecond);

void BM_LowWeightSpace(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(low_weight_space(haagerup(), 4, Shading::plus));
}
BENCHMARK(BM_LowWeightSpace)->Unit(benchmark::kMillisecond);

void BM_FindGenerator(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(find_generator(haagerup()));
}
BENCHMARK(BM_FindGenerator)->Unit(benchmark::kMillisecond);

void BM_Relation4Box(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(relation_4box(generator()));
}
BENCHMARK(BM_Relation4Box)->Unit(benchmark::kMillisecond);

void BM_PowerTraceOracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle::power_trace(generator().element, 3));
}
BENCHMARK(BM_PowerTraceOracle)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
