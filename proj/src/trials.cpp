#include "greedy/trials.hpp"

#include <optional>

#include <omp.h>

namespace greedy {

namespace {

RunSummary one_trial(const Hypergraph& h, RunOptions options, std::uint64_t master,
                     std::size_t t) {
  options.stride = 0;
  RunSummary s = run_process(h, derive_seed(master, t), options).summary;
  s.trial = t;
  return s;
}

TrialBatch collect(std::vector<std::optional<RunSummary>>& slots) {
  TrialBatch batch;
  for (auto& s : slots) {
    if (s) {
      batch.runs.push_back(std::move(*s));
    } else {
      batch.truncated = true;
    }
  }
  return batch;
}

}  // namespace

TrialBatch run_trials(const Hypergraph& h, const RunOptions& options,
                      std::uint64_t master_seed, std::size_t trials, int jobs,
                      const std::atomic<bool>* stop) {
  std::vector<std::optional<RunSummary>> slots(trials);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(trials);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < n; ++t) {
    if (stop && stop->load(std::memory_order_relaxed)) continue;
    slots[static_cast<std::size_t>(t)] =
        one_trial(h, options, master_seed, static_cast<std::size_t>(t));
  }
  return collect(slots);
}

TrialBatch run_trials_serial(const Hypergraph& h, const RunOptions& options,
                             std::uint64_t master_seed, std::size_t trials,
                             const std::atomic<bool>* stop) {
  std::vector<std::optional<RunSummary>> slots(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    if (stop && stop->load(std::memory_order_relaxed)) break;
    slots[t] = one_trial(h, options, master_seed, t);
  }
  return collect(slots);
}

}  // namespace greedy
