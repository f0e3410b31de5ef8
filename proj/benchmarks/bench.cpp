#include <benchmark/benchmark.h>

#include "asl/arc_system.hpp"
#include "asl/canonical.hpp"
#include "asl/constructions.hpp"
#include "asl/enumerate.hpp"
#include "asl/io.hpp"
#include "asl/surgery.hpp"

namespace {

void BM_validate(benchmark::State& state) {
  const asl::SplitPresentation sp = asl::explicit_maximal({1, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(asl::validate(sp).valid);
}
BENCHMARK(BM_validate);

void BM_canonical_code(benchmark::State& state) {
  const asl::SplitPresentation sp = asl::explicit_maximal({1, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(asl::canonical_code(sp, asl::EquivMode::PMod));
}
BENCHMARK(BM_canonical_code);

void BM_delete_arc(benchmark::State& state) {
  const asl::SplitPresentation sp = asl::explicit_maximal({1, 2, 2});
  const int id = sp.arcs.front().id;
  for (auto _ : state) benchmark::DoNotOptimize(asl::delete_arc(sp, id));
}
BENCHMARK(BM_delete_arc);

void BM_roundtrip(benchmark::State& state) {
  const asl::SplitPresentation sp = asl::explicit_maximal({1, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        asl::read_presentation(asl::write_presentation(sp)));
}
BENCHMARK(BM_roundtrip);

void BM_enumerate_maximal_torus(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        asl::enumerate_maximal({1, 1, 1}, asl::EquivMode::PMod, {9, 1, false}));
}
BENCHMARK(BM_enumerate_maximal_torus);

void BM_enumerate_filling_sphere(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        asl::enumerate_filling({0, 4, 2}, asl::EquivMode::PMod, {9, 1, false}));
}
BENCHMARK(BM_enumerate_filling_sphere);

}  // namespace

BENCHMARK_MAIN();
