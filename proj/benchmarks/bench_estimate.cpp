#include <benchmark/benchmark.h>

#include "mdflow/estimate.hpp"
#include "mdflow/exact.hpp"
#include "mdflow/reconstruct.hpp"

namespace {

struct Solved {
  mdflow::MDGrid grid;
  mdflow::ProblemData data;
  mdflow::DiscreteSolution sol;
  mdflow::ReconstructedPressure rec;
};

const Solved& solved() {
  static Solved s = [] {
    Solved r{mdflow::build_validation_grid(0.025, 0.05, 0.03571), {}, {}, {}};
    r.data = mdflow::make_validation_data(r.grid);
    const mdflow::LinearSystem sys = mdflow::assemble_tpfa(r.grid, r.data);
    r.sol = mdflow::solve(r.grid, r.data, sys);
    r.rec = mdflow::reconstruct_pressure(r.grid, r.data, r.sol);
    return r;
  }();
  return s;
}

void BM_ReconstructPressure(benchmark::State& state) {
  const Solved& s = solved();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mdflow::reconstruct_pressure(s.grid, s.data, s.sol));
}
BENCHMARK(BM_ReconstructPressure)->Unit(benchmark::kMillisecond);

void BM_AssembleReport(benchmark::State& state) {
  const Solved& s = solved();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mdflow::assemble_report(s.grid, s.data, s.sol, s.rec));
}
BENCHMARK(BM_AssembleReport)->Unit(benchmark::kMillisecond);

void BM_TrueErrors(benchmark::State& state) {
  const Solved& s = solved();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mdflow::validation_errors(s.grid, s.data, s.sol, s.rec));
}
BENCHMARK(BM_TrueErrors)->Unit(benchmark::kMillisecond);

}  // namespace
