// Serial reference vs OpenMP scan of the intersection candidate space.

#include <benchmark/benchmark.h>

#include "lenequiv/intersections.hpp"
#include "lenequiv/pipeline.hpp"

using namespace lenequiv;

namespace {

const Representation& genus_two() {
  static const Representation rep = sample_representation(SurfaceSpec{2, 1, 0}, 1, 3);
  return rep;
}

const Representation& pants() {
  static const Representation rep = sample_representation(SurfaceSpec{0, 3, 0}, 1, 3);
  return rep;
}

void BM_Mutual(benchmark::State& state, Execution exec) {
  const Word alpha = Word::parse("aBcd"), beta = Word::parse("abCD");
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mutual_intersections(alpha, beta, genus_two(), bound, exec));
}

void BM_Self(benchmark::State& state, Execution exec) {
  const Word alpha = Word::parse("aabAbb");
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(self_intersections(alpha, pants(), bound, exec));
}

void BM_LengthSweep(benchmark::State& state) {
  std::vector<Representation> reps;
  for (std::uint64_t s = 0; s < 100; ++s) reps.push_back(sample_representation(SurfaceSpec{0, 3, 0}, s, 3));
  const CurvePair pair = build_pair_self(Word::parse("ab"), Word::parse("a"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_equal_length(pair, reps));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Mutual, serial, Execution::serial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Mutual, parallel, Execution::parallel)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Self, serial, Execution::serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Self, parallel, Execution::parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LengthSweep)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
