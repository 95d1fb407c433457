#include <benchmark/benchmark.h>

#include <random>

#include "graded/enumerate.hpp"
#include "graded/normal_form.hpp"
#include "graded/presets.hpp"

using namespace graded;

static Mat random_rows(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> entry(-3, 3);
  Mat m(rows, Vec(cols));
  for (auto& r : m)
    for (auto& x : r) x = entry(rng);
  return m;
}

static void BM_Hnf(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Mat rows = random_rows(n + 2, n, 17);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(rows, n));
}
BENCHMARK(BM_Hnf)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

static void BM_Smith(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Mat rows = random_rows(n, n, 23);
  for (auto _ : state) benchmark::DoNotOptimize(smith(rows, n));
}
BENCHMARK(BM_Smith)->Arg(2)->Arg(4)->Arg(8);

static void BM_EnumerateGraded(benchmark::State& state) {
  Int n = state.range(0);
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(2)), {{n, 0}, {n, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graded_submodules(m));
}
BENCHMARK(BM_EnumerateGraded)->Arg(12)->Arg(24)->Arg(64);

static void BM_EnumerateAll(benchmark::State& state) {
  Int n = state.range(0);
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(2)), {{n, 0}, {n, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(m));
}
BENCHMARK(BM_EnumerateAll)->Arg(6)->Arg(12)->Arg(16);
