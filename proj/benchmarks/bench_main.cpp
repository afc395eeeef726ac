#include <benchmark/benchmark.h>

#include "chirality/bounds_lab.hpp"
#include "chirality/chirality.hpp"
#include "chirality/closed_form.hpp"
#include "chirality/containment.hpp"
#include "chirality/phase_atlas.hpp"
#include "chirality/random.hpp"

using namespace chirality;

namespace {

ConvexPolygon sample_body(std::size_t seed) {
  Rng rng(seed);
  return random_polygon(rng);
}

void BM_Circumradius(benchmark::State& state) {
  const ConvexPolygon k = sample_body(1);
  const ConvexPolygon c = reflect(k, Axis(0.7));
  for (auto _ : state) benchmark::DoNotOptimize(circumradius_value(k, c));
}
BENCHMARK(BM_Circumradius);

void BM_Alpha1Numeric(benchmark::State& state) {
  const ConvexPolygon k = sample_body(2);
  Alpha1Options opts;
  opts.grid = static_cast<std::size_t>(state.range(0));
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(alpha1_numeric(k, opts).value);
}
BENCHMARK(BM_Alpha1Numeric)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_TriangleClosedForm(benchmark::State& state) {
  const TriangleShape t = TriangleShape::from_sides(0.6, 0.78, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_alpha1(t).value);
}
BENCHMARK(BM_TriangleClosedForm);

void BM_PhaseGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phase_grid(Family::Parallelogram, 64, 1).size());
}
BENCHMARK(BM_PhaseGrid)->Unit(benchmark::kMillisecond);

void BM_Alpha0(benchmark::State& state) {
  const ConvexPolygon k = make_asymmetry_witness(1.5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(asymmetry_alpha0(k).value);
}
BENCHMARK(BM_Alpha0)->Arg(90)->Arg(720);

}  // namespace
BENCHMARK_MAIN();
