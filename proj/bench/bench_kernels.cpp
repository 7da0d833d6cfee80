// Serial references against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include <omp.h>

#include "greedy/generators.hpp"
#include "greedy/trials.hpp"

namespace {

const greedy::Hypergraph& steiner(std::uint32_t n) {
  static std::map<std::uint32_t, greedy::Hypergraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, greedy::build_steiner(greedy::steiner_params(n, 2, 3))).first;
  }
  return it->second;
}

greedy::RunOptions with_envelope(const greedy::Hypergraph& h) {
  greedy::RunOptions opt;
  opt.envelope = greedy::ParamSet::from_hypergraph(h);
  return opt;
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto& h = steiner(static_cast<std::uint32_t>(state.range(0)));
  const auto opt = with_envelope(h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy::run_trials_serial(h, opt, 1, 32));
  }
  state.SetItemsProcessed(state.iterations() * 32);
}

void BM_TrialsParallel(benchmark::State& state) {
  const auto& h = steiner(static_cast<std::uint32_t>(state.range(0)));
  const auto opt = with_envelope(h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy::run_trials(h, opt, 1, 32));
  }
  state.SetItemsProcessed(state.iterations() * 32);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_CodegreeSerial(benchmark::State& state) {
  const auto& h = steiner(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy::max_codegree_serial(h));
}

void BM_CodegreeParallel(benchmark::State& state) {
  const auto& h = steiner(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy::max_codegree(h));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CodegreeSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodegreeParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
