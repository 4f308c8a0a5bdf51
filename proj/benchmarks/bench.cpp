#include <benchmark/benchmark.h>

#include "fitt/betti.hpp"
#include "fitt/fitting.hpp"
#include "fitt/graph.hpp"
#include "fitt/relative_ideal.hpp"
#include "fitt/semigroup.hpp"
#include "fitt/series.hpp"

namespace {

void bm_fitting_k4(benchmark::State& state) {
  fitt::MonomialIdeal ideal = fitt::edge_ideal(fitt::Graph::complete(4));
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fitt::fitting_ideal(ideal, j, 1000000));
}
BENCHMARK(bm_fitting_k4)->Arg(1)->Arg(3)->Arg(5);

void bm_fitting_k5_high(benchmark::State& state) {
  fitt::MonomialIdeal ideal = fitt::edge_ideal(fitt::Graph::complete(5));
  for (auto _ : state)
    benchmark::DoNotOptimize(fitt::fitting_ideal(ideal, 8, 10000000));
}
BENCHMARK(bm_fitting_k5_high);

void bm_radical_formula_k5(benchmark::State& state) {
  fitt::Graph g = fitt::Graph::complete(5);
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fitt::radical_fitting_formula(g, j));
}
BENCHMARK(bm_radical_formula_k5)->Arg(4)->Arg(7);

void bm_betti_c5(benchmark::State& state) {
  fitt::MonomialIdeal ideal = fitt::edge_ideal(fitt::Graph::cycle(5));
  for (auto _ : state) benchmark::DoNotOptimize(fitt::betti_pd(ideal));
}
BENCHMARK(bm_betti_c5);

void bm_fitting1_series(benchmark::State& state) {
  fitt::NumericalSemigroup s = fitt::NumericalSemigroup::from_generators({4, 5});
  fitt::RelativeIdeal ideal(s, {12, 13, 14, 15});
  for (auto _ : state)
    benchmark::DoNotOptimize(fitt::fitting1_series(ideal, ideal));
}
BENCHMARK(bm_fitting1_series);

void bm_canonical_search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fitt::search_canonical_fixed_points(6));
}
BENCHMARK(bm_canonical_search);

}  // namespace

BENCHMARK_MAIN();
