// Serial reference sweep against the OpenMP scheduler on the same task list.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "eqkt/sweep.hpp"

namespace {

eqkt::SweepOptions options_for(eqkt::Suite suite, long max_n) {
  eqkt::SweepOptions o;
  o.suite = suite;
  o.max_n = max_n;
  o.jobs = omp_get_max_threads();
  return o;
}

void BM_KgroupsSerial(benchmark::State& state) {
  const auto tasks = eqkt::enumerate_tasks(options_for(eqkt::Suite::kgroups, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqkt::run_tasks_serial(tasks));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tasks.size()));
}

void BM_KgroupsParallel(benchmark::State& state) {
  const auto o = options_for(eqkt::Suite::kgroups, state.range(0));
  const auto tasks = eqkt::enumerate_tasks(o);
  for (auto _ : state) benchmark::DoNotOptimize(eqkt::run_tasks_parallel(tasks, o.jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tasks.size()));
}

void BM_RestrictionSerial(benchmark::State& state) {
  const auto tasks = eqkt::enumerate_tasks(options_for(eqkt::Suite::restriction, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqkt::run_tasks_serial(tasks));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tasks.size()));
}

void BM_RestrictionParallel(benchmark::State& state) {
  const auto o = options_for(eqkt::Suite::restriction, state.range(0));
  const auto tasks = eqkt::enumerate_tasks(o);
  for (auto _ : state) benchmark::DoNotOptimize(eqkt::run_tasks_parallel(tasks, o.jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tasks.size()));
}

}  // namespace

BENCHMARK(BM_KgroupsSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KgroupsParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestrictionSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestrictionParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
