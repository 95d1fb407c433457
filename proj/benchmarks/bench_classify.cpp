#include <benchmark/benchmark.h>

#include "graded/classify.hpp"
#include "graded/laws.hpp"
#include "graded/presets.hpp"

using namespace graded;

static void BM_ClassifyGaussian(benchmark::State& state) {
  Int n = state.range(0);
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(2)), {{n, 0}, {n, 1}}));
  SubLattice k = multiple_of_module(Element({2}), m);
  for (auto _ : state) {
    Analyzer an(m);
    IdealAnalyzer ia(m->ring());
    benchmark::DoNotOptimize(classify(an, &ia, k));
  }
}
BENCHMARK(BM_ClassifyGaussian)->Arg(6)->Arg(18)->Arg(24);

static void BM_ClassifyDivisorWitness(benchmark::State& state) {
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(2)), {{0, 0}, {0, 1}}));
  SubLattice k = span({Element({state.range(0), 0}), Element({0, state.range(0)})}, m);
  for (auto _ : state) {
    Analyzer an(m);
    benchmark::DoNotOptimize(an.r_submodule(k));
    benchmark::DoNotOptimize(an.special_r_submodule(k));
  }
}
BENCHMARK(BM_ClassifyDivisorWitness)->Arg(3)->Arg(12)->Arg(60);

static void BM_LawSuiteFamily(benchmark::State& state) {
  auto grid = family_instances("zn-gaussian", {state.range(0), 0});
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(grid));
}
BENCHMARK(BM_LawSuiteFamily)->Arg(8)->Unit(benchmark::kMillisecond);
