#include <benchmark/benchmark.h>

#include "cubiclam/contraction.hpp"
#include "cubiclam/quad_gap.hpp"
#include "cubiclam/rays.hpp"
#include "cubiclam/render.hpp"
#include "cubiclam/thread.hpp"

using namespace cubiclam;

static void BM_OrbitType(benchmark::State& state) {
  const Angle a(1, 2186);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_type(3, a));
}
BENCHMARK(BM_OrbitType);

static void BM_GrowGap(benchmark::State& state) {
  const GapSpec spec = major_from_hole(Arc(Angle(1, 6), Angle(1, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(grow_gap(spec, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GrowGap)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_PqpgHoles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pqpg_holes(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PqpgHoles)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_Tau(benchmark::State& state) {
  const GapApprox g = grow_gap(major_from_critical_tag(Angle()), 5);
  for (auto _ : state) {
    for (const Angle& v : g.vertices) benchmark::DoNotOptimize(tau(g, v));
  }
}
BENCHMARK(BM_Tau)->Unit(benchmark::kMillisecond);

static void BM_Patterns(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_periodic_patterns(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Patterns)->Arg(6)->Arg(10)->Arg(14);

static void BM_Contraction(benchmark::State& state) {
  const auto schedule = linear_gap_schedule(10000);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_contraction(0.4, 2.0, 10.0, schedule, 10000));
}
BENCHMARK(BM_Contraction);

static void BM_DynamicRay(benchmark::State& state) {
  const CubicMap f(root_of_unity(Angle(1, 3)), Complex(0.3, 0.2));
  for (auto _ : state) benchmark::DoNotOptimize(trace_dynamic_ray(f, Angle(1, 7), 4.0, 1e-6, 100));
}
BENCHMARK(BM_DynamicRay)->Unit(benchmark::kMillisecond);

static void BM_ParameterRay(benchmark::State& state) {
  const Complex lambda = root_of_unity(Angle(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(trace_parameter_ray(lambda, Angle(1, 6), 4.0, 1e-4, 100));
}
BENCHMARK(BM_ParameterRay)->Unit(benchmark::kMillisecond);

static void BM_RenderSlice(benchmark::State& state) {
  const Complex lambda = root_of_unity(Angle(1, 3));
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_slice(lambda, Window{-4, -4, 4, 4}, Resolution{256, 256}, 200, workers));
  }
}
BENCHMARK(BM_RenderSlice)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
