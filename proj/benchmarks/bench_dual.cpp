#include <benchmark/benchmark.h>

#include <mgdual/idealops.hpp>
#include <mgdual/oracle.hpp>

#include <random>

#include "fixtures.hpp"

using namespace mgdual;

namespace {

void BM_GoTable(benchmark::State& state) {
  const GradedIdeal i = fixtures::go_ideal();
  const MultiDegree top{state.range(0)};
  for (auto _ : state) {
    DualTable t(i);
    benchmark::DoNotOptimize(hilbert_table(t, top));
  }
}
BENCHMARK(BM_GoTable)->Arg(4)->Arg(16)->Arg(32);

void BM_CurveTable(benchmark::State& state) {
  const GradedIdeal i = fixtures::hirzebruch_curve();
  const Int a = state.range(0);
  for (auto _ : state) {
    DualTable t(i);
    benchmark::DoNotOptimize(hilbert_table(t, MultiDegree{a, a}));
  }
}
BENCHMARK(BM_CurveTable)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CurveOracle(benchmark::State& state) {
  const GradedIdeal i = fixtures::hirzebruch_curve();
  const Int a = state.range(0);
  const auto region = i.grading().lattice_points_below(MultiDegree{a, a});
  for (auto _ : state)
    for (const auto& m : region) benchmark::DoNotOptimize(oracle_hilbert(i, m));
}
BENCHMARK(BM_CurveOracle)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Phosphorylation(benchmark::State& state) {
  const auto [i, t] = fixtures::phosphorylation(1);
  const MultiDegree top{state.range(0)};
  for (auto _ : state) {
    DualTable table(i, static_cast<ClosednessRoute>(state.range(1)));
    benchmark::DoNotOptimize(hilbert_table(table, top));
  }
}
BENCHMARK(BM_Phosphorylation)
    ->ArgNames({"deg", "route"})
    ->Args({4, static_cast<int>(ClosednessRoute::Preimage)})
    ->Args({4, static_cast<int>(ClosednessRoute::Integration)})
    ->Args({6, static_cast<int>(ClosednessRoute::Auto)})
    ->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-9, 9);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = e(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
