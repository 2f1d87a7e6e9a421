#include <benchmark/benchmark.h>

#include "mdflow/discretize.hpp"
#include "mdflow/exact.hpp"

namespace {

const mdflow::MDGrid& grid() {
  static mdflow::MDGrid g =
      mdflow::build_validation_grid(0.025, 0.05, 0.03571);
  return g;
}

const mdflow::ProblemData& data() {
  static mdflow::ProblemData d = mdflow::make_validation_data(grid());
  return d;
}

void BM_AssembleTpfa(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mdflow::assemble_tpfa(grid(), data()));
}
BENCHMARK(BM_AssembleTpfa)->Unit(benchmark::kMillisecond);

void BM_AssembleRt0P0(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mdflow::assemble_rt0p0(grid(), data()));
}
BENCHMARK(BM_AssembleRt0P0)->Unit(benchmark::kMillisecond);

void BM_BuildValidationGrid(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mdflow::build_validation_grid(0.025, 0.05, 0.03571));
}
BENCHMARK(BM_BuildValidationGrid)->Unit(benchmark::kMillisecond);

}  // namespace
