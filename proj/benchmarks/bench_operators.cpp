// Microbenchmarks for truncation assembly, the compositional oracle and
// the spectral solvers. Assembly scales with BERGMAN_WORKERS; set it
// when comparing machines. Timings are informational and never gate the
// test suite; use tools/bergman-ops bench for the CSV form.

#include <benchmark/benchmark.h>

#include "bergman/oracle.hpp"
#include "bergman/spectral.hpp"

namespace {

using namespace bergman;

SpaceParams params_of(int dim) {
  SpaceParams p;
  p.alpha = 1.0;
  p.k = 2;
  p.dim = dim;
  return p;
}

const HarmonicSymbol& analytic_fixture() {
  static const HarmonicSymbol s = truncated_exponential(ExpKind::Analytic, 15);
  return s;
}

const HarmonicSymbol& anti_fixture() {
  static const HarmonicSymbol s =
      truncated_exponential(ExpKind::AntiAnalytic, 15);
  return s;
}

void BM_BuildToeplitz(benchmark::State& state) {
  SpaceParams p = params_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OperatorMatrix m = build_matrix(OperatorKind::Toeplitz, analytic_fixture(), p);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_BuildToeplitz)->RangeMultiplier(2)->Range(32, 512);

void BM_BuildSlantToeplitz(benchmark::State& state) {
  SpaceParams p = params_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OperatorMatrix m =
        build_matrix(OperatorKind::SlantToeplitz, analytic_fixture(), p);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_BuildSlantToeplitz)->RangeMultiplier(2)->Range(32, 512);

void BM_BuildSlantLittleHankel(benchmark::State& state) {
  SpaceParams p = params_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OperatorMatrix m =
        build_matrix(OperatorKind::SlantLittleHankel, anti_fixture(), p);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_BuildSlantLittleHankel)->RangeMultiplier(2)->Range(32, 512);

void BM_BuildSlantShift(benchmark::State& state) {
  SpaceParams p = params_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OperatorMatrix m = build_matrix(OperatorKind::SlantShift, std::nullopt, p);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_BuildSlantShift)->RangeMultiplier(2)->Range(64, 1024);

// The polynomial route is for cross-checking, so it only needs to be
// fast enough to run in tests; track it at test-sized dimensions.
void BM_OracleSlantToeplitz(benchmark::State& state) {
  SpaceParams p = params_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    OperatorMatrix m =
        oracle_matrix(OperatorKind::SlantToeplitz, analytic_fixture(), p);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_OracleSlantToeplitz)->RangeMultiplier(2)->Range(8, 32);

void BM_Eigenvalues(benchmark::State& state) {
  OperatorMatrix m =
      build_matrix(OperatorKind::SlantToeplitz, analytic_fixture(),
                   params_of(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    SpectrumResult r = eigenvalues(m);
    benchmark::DoNotOptimize(r.max_residual);
  }
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(32, 256);

void BM_SingularValues(benchmark::State& state) {
  OperatorMatrix m =
      build_matrix(OperatorKind::SlantLittleHankel, anti_fixture(),
                   params_of(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    std::vector<double> sv = singular_values(m);
    benchmark::DoNotOptimize(sv.data());
  }
}
BENCHMARK(BM_SingularValues)->RangeMultiplier(2)->Range(32, 256);

// One grid point: a Schur reduction plus the inverse iteration. The
// full-figure cost is this times the grid size, divided by the worker
// count.
void BM_PseudospectrumPoint(benchmark::State& state) {
  OperatorMatrix m =
      build_matrix(OperatorKind::SlantShift, std::nullopt,
                   params_of(static_cast<int>(state.range(0))));
  GridSpec g{0.5, 0.5, 0.0, 0.0, 1};
  for (auto _ : state) {
    PseudospectrumGrid grid = pseudospectrum(m, g);
    benchmark::DoNotOptimize(grid.sigma.data());
  }
}
BENCHMARK(BM_PseudospectrumPoint)->RangeMultiplier(2)->Range(64, 256);

}  // namespace

BENCHMARK_MAIN();
