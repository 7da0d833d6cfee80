#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "greedy/hypergraph.hpp"
#include "greedy/process.hpp"

namespace greedy {

struct TrialBatch {
  /// Completed runs ordered by trial index. Trial t ran with seed
  /// derive_seed(master_seed, t).
  std::vector<RunSummary> runs;
  /// Set when `stop` fired before every trial ran.
  bool truncated = false;
};

/// Runs `trials` independent processes over a shared read-only hypergraph,
/// spread across up to `jobs` OpenMP threads (0 = runtime default). Results
/// do not depend on the thread count. Trials not yet started when `stop`
/// becomes true are skipped. Trajectory recording in `options` is ignored.
TrialBatch run_trials(const Hypergraph& h, const RunOptions& options,
                      std::uint64_t master_seed, std::size_t trials, int jobs = 0,
                      const std::atomic<bool>* stop = nullptr);

/// Serial reference for run_trials.
TrialBatch run_trials_serial(const Hypergraph& h, const RunOptions& options,
                             std::uint64_t master_seed, std::size_t trials,
                             const std::atomic<bool>* stop = nullptr);

}  // namespace greedy
