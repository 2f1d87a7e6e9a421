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

void BM_SolveTpfa(benchmark::State& state) {
  const mdflow::LinearSystem sys = mdflow::assemble_tpfa(grid(), data());
  for (auto _ : state)
    benchmark::DoNotOptimize(mdflow::solve(grid(), data(), sys));
}
BENCHMARK(BM_SolveTpfa)->Unit(benchmark::kMillisecond);

void BM_SolveRt0P0(benchmark::State& state) {
  const mdflow::LinearSystem sys = mdflow::assemble_rt0p0(grid(), data());
  for (auto _ : state)
    benchmark::DoNotOptimize(mdflow::solve(grid(), data(), sys));
}
BENCHMARK(BM_SolveRt0P0)->Unit(benchmark::kMillisecond);

}  // namespace
