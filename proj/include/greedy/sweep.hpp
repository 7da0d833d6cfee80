#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedy/fit.hpp"
#include "greedy/process.hpp"

namespace greedy::analysis {

struct SweepRow {
  std::string label;
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::uint64_t D = 0;
  std::uint32_t r = 2;
  std::uint64_t L = 0;
  std::size_t trials = 0;
  double mean_X = 0.0;
  double std_X = 0.0;  // sample standard deviation; 0 for a single trial
  double mean_M = 0.0;
  double breach_freq = 0.0;
  double thm_x_bound = 0.0;
  std::optional<double> conj_exponent;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<PowerLawFit> fit;  // present with >= 3 rows
  bool truncated = false;
};

/// Folds per-trial summaries (in trial order) into one row. Requires at
/// least one run. Instance fields other than label/n are taken from `params`.
SweepRow aggregate_trials(std::string label, std::uint64_t n, const ParamSet& params,
                          std::span<const RunSummary> runs,
                          std::optional<double> conj_exponent = std::nullopt);

struct SteinerSweepConfig {
  std::uint32_t ell = 2;
  std::uint32_t k = 3;
  std::vector<std::uint32_t> n_values;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double p_floor = 0.05;
  int jobs = 0;
  std::optional<std::uint64_t> cap;
};

/// One row per n over H_{l,k}(n). Trial t at every n uses
/// derive_seed(seed, t). Stops early (truncated) when `stop` fires.
/// `on_row` sees each row as soon as it is complete.
SweepResult run_steiner_sweep(const SteinerSweepConfig& config,
                              const std::atomic<bool>* stop = nullptr,
                              const std::function<void(const SweepRow&)>& on_row = {});

/// Columns: label, n, N, D, r, L, trials, mean_X, std_X, mean_M,
/// breach_freq, thm_x_bound, conj_exponent.
void write_sweep_header(std::ostream& out);
void write_sweep_row(std::ostream& out, const SweepRow& row);
void write_truncation_marker(std::ostream& out);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Keys: slope, intercept, residual, points ([n, mean_X] pairs).
nlohmann::ordered_json fit_json(const PowerLawFit& fit,
                                std::span<const std::pair<double, double>> points);

std::vector<std::pair<double, double>> fit_points(std::span<const SweepRow> rows);

}  // namespace greedy::analysis
