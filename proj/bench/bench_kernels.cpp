// Serial reference against the OpenMP kernels. Arg 0 is Exec::serial, 1 is
// Exec::parallel; the inputs are identical for both.

#include <benchmark/benchmark.h>

#include "astoric/census.hpp"
#include "astoric/parallel.hpp"
#include "astoric/toric_algebra.hpp"

using namespace astoric;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(worker_count()));
}

void BM_CensusReport(benchmark::State& state) {
  const ClassEnumerator classes(Cone::nonnegative_orthant(2), 3, FiniteField::get(2, 1));
  const LinearFunctional lambda{2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(census_report(classes, lambda, policy(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * classes.count()));
  label(state);
}

void BM_BruteForceIsomorphic(benchmark::State& state) {
  // a non-isomorphic pair forces the full search
  const FiniteField& f = FiniteField::get(2, 2);
  const Cone c = Cone::ray(LatticePoint{1});
  const ToricDatum a1(f, c, 9, {{{1}, f.one()}});
  const ToricDatum a2(f, c, 9);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_isomorphic(a1, a2, 9, policy(state)));
  label(state);
}

void BM_BruteForceClassCount(benchmark::State& state) {
  const FiniteField& f = FiniteField::get(2, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_class_count(Cone::nonnegative_orthant(2), 3, f, policy(state)));
  label(state);
}

void BM_BoxPoints(benchmark::State& state) {
  const Cone c = Cone::generated_by(3, std::vector<LatticePoint>{{1, 0, 0}, {1, 2, 0}, {0, 1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(box_points(c, 24, policy(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_CensusReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceIsomorphic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceClassCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
