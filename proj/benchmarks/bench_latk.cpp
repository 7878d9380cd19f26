#include <benchmark/benchmark.h>

#include "latk/analysis.hpp"
#include "latk/generator.hpp"
#include "latk/io.hpp"
#include "latk/lift.hpp"
#include "latk/oracle.hpp"
#include "latk/samples.hpp"
#include "latk/validate.hpp"

using namespace latk;

namespace {

// Representative liftable diagrams by crossing count.
Diagram fixture(int crossings) {
    switch (crossings) {
        case 1: return samples::twist();
        case 4: return samples::rings();
        case 5: return samples::pcg_arc_probe();
        default: return samples::pcg_cycle_probe();  // 13 crossings
    }
}

void BM_RandomDiagram(benchmark::State& state) {
    const GenParams params{8, int(state.range(0)), 2, 20000, 40};
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_diagram(seed++, params));
}
BENCHMARK(BM_RandomDiagram)->Arg(2)->Arg(4);

void BM_FindCeltic(benchmark::State& state) {
    const Diagram d = fixture(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_celtic(d));
}
BENCHMARK(BM_FindCeltic)->Arg(4)->Arg(13);

void BM_ProblemCrossingGraph(benchmark::State& state) {
    const Diagram d = fixture(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(problem_crossing_graph(d));
}
BENCHMARK(BM_ProblemCrossingGraph)->Arg(4)->Arg(13);

void BM_LiftDiagram(benchmark::State& state) {
    const Diagram d = fixture(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(lift_diagram(d));
}
BENCHMARK(BM_LiftDiagram)->Arg(1)->Arg(4)->Arg(13);

void BM_OracleLiftable(benchmark::State& state) {
    const Diagram d = fixture(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_liftable(d));
}
BENCHMARK(BM_OracleLiftable)->Arg(4)->Arg(13);

void BM_OracleLift(benchmark::State& state) {
    const Diagram d = fixture(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_lift(d));
}
BENCHMARK(BM_OracleLift)->Arg(4)->Arg(13);

void BM_FullValidate(benchmark::State& state) {
    const Diagram d = fixture(int(state.range(0)));
    const Link3 k = oracle_lift(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(full_validate(d, k));
}
BENCHMARK(BM_FullValidate)->Arg(4)->Arg(13);

void BM_SerializeParse(benchmark::State& state) {
    const Diagram d = fixture(13);
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_diagram(serialize_diagram(d)));
}
BENCHMARK(BM_SerializeParse);

void BM_RenderSvg(benchmark::State& state) {
    const Diagram d = fixture(13);
    for (auto _ : state)
        benchmark::DoNotOptimize(render_svg(d));
}
BENCHMARK(BM_RenderSvg);

}  // namespace

BENCHMARK_MAIN();
