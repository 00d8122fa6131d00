#include <benchmark/benchmark.h>

#include <random>

#include "critgroup/chip_firing.hpp"
#include "critgroup/critical.hpp"
#include "critgroup/exact_linalg.hpp"
#include "critgroup/generators.hpp"
#include "critgroup/spanning_trees.hpp"

using namespace critgroup;

namespace {

IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntegerMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_InvariantFactors(benchmark::State& state) {
  const IntegerMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
}
BENCHMARK(BM_InvariantFactors)->Arg(8)->Arg(16)->Arg(32);

void BM_Determinant(benchmark::State& state) {
  const IntegerMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(32)->Arg(64);

void BM_CriticalGroupDirect(benchmark::State& state) {
  const auto c = gen::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(critical_group_direct(c, 1));
}
BENCHMARK(BM_CriticalGroupDirect)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CriticalGroupReduced(benchmark::State& state) {
  const auto c = gen::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  const auto tree = *find_torsion_free_tree(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(critical_group_reduced(c, 1, tree));
}
BENCHMARK(BM_CriticalGroupReduced)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  const auto c = gen::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  EnumerationOptions o;
  o.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(c, 2, o));
}
BENCHMARK(BM_EnumerateTrees)->Args({5, 1})->Args({6, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

void BM_CriticalStates(benchmark::State& state) {
  const ChipFiringGame g(gen::complete_graph(static_cast<int>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(g.critical_states());
}
BENCHMARK(BM_CriticalStates)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
