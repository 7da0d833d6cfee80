#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "greedy/degree_tracker.hpp"
#include "greedy/edge_pool.hpp"
#include "greedy/envelope.hpp"
#include "greedy/hypergraph.hpp"
#include "greedy/random.hpp"

namespace greedy {

struct StepReport {
  EdgeId chosen = 0;
  std::size_t removed = 0;
};

/// Full state of one run of the random greedy matching process after `step`
/// choices: the matching M(i), the remaining hypergraph H(i) as an edge pool,
/// and the live degree of every vertex.
class ProcessState {
 public:
  /// Initial state. With `track_degrees` the live degrees of unsaturated
  /// vertices are mirrored into a DegreeTracker for envelope checks.
  ProcessState(const Hypergraph& h, std::uint64_t seed, bool track_degrees = false);

  std::uint64_t step() const noexcept { return matching_.size(); }
  std::size_t q() const noexcept { return pool_.size(); }
  std::size_t removed_total() const noexcept { return removed_total_; }

  std::span<const EdgeId> matching() const noexcept { return matching_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degree_; }
  std::span<const std::uint8_t> saturated() const noexcept { return saturated_; }
  bool is_saturated(VertexId v) const noexcept { return saturated_[v] != 0; }
  std::uint32_t degree(VertexId v) const noexcept { return degree_[v]; }

  const EdgePool& pool() const noexcept { return pool_; }
  const DegreeTracker* tracker() const noexcept { return tracker_ ? &*tracker_ : nullptr; }
  Rng& rng() noexcept { return rng_; }

 private:
  friend StepReport apply_choice(ProcessState&, const Hypergraph&, EdgeId);

  EdgePool pool_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint8_t> saturated_;
  std::vector<EdgeId> matching_;
  std::size_t removed_total_ = 0;
  std::optional<DegreeTracker> tracker_;
  Rng rng_;
};

/// Adds `chosen` (which must be live) to the matching and deletes every live
/// edge meeting it.
StepReport apply_choice(ProcessState& state, const Hypergraph& h, EdgeId chosen);

/// One step of the process: a uniformly random live edge is chosen and
/// applied. Throws StateError on an empty pool.
StepReport greedy_step(ProcessState& state, const Hypergraph& h);

/// Outcome of comparing a state against the envelope at its step.
struct BreachVerdict {
  bool q_breach = false;
  bool d_breach = false;
  bool q_critical = false;
  bool d_critical = false;
  double q_dev = 0.0;      // Q - q_hat
  double d_max_dev = 0.0;  // max over unsaturated v of |d_v - d_hat|; 0 if none
  std::optional<VertexId> witness;  // an unsaturated vertex attaining d_max_dev

  bool breach() const noexcept { return q_breach || d_breach; }
};

/// Envelope check from the tracked degree multiset. Does not name a witness.
BreachVerdict breach_check(std::size_t q, const DegreeTracker& degrees,
                           const EnvelopePoint& env);

/// Serial reference: scans every unsaturated vertex and names the argmax.
BreachVerdict breach_check_scan(std::size_t q, std::span<const std::uint32_t> degrees,
                                std::span<const std::uint8_t> saturated,
                                const EnvelopePoint& env);

/// Checks `state` against the envelope at its own step. Only unsaturated
/// vertices take part in the degree condition. Throws StateError if p <= 0.
BreachVerdict breach_check(const ProcessState& state, const ParamSet& params);

struct TrajectoryRow {
  std::uint64_t step = 0;
  std::size_t q = 0;
  double p = 1.0;
  std::optional<EnvelopePoint> envelope;  // absent below the p-floor
  BreachVerdict verdict;                  // meaningful only with an envelope
};

struct RunOptions {
  /// Instance parameters; without them no envelope is evaluated.
  std::optional<ParamSet> envelope;
  /// Envelopes are evaluated only while p >= p_floor.
  double p_floor = 0.05;
  /// Record a trajectory row every `stride` steps (plus the final step); 0 records nothing.
  std::size_t stride = 0;
  /// Envelope check interval; 0 means every step when m <= 10^6, otherwise
  /// the recording stride (64 when not recording).
  std::size_t check_interval = 0;
};

struct RunSummary {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t M = 0;
  std::uint64_t N = 0;
  std::uint32_t r = 2;
  std::uint64_t m = 0;
  std::optional<std::uint64_t> D;
  std::optional<std::uint64_t> L;
  std::uint64_t x_numerator = 0;  // X = x_numerator / x_denominator, reduced
  std::uint64_t x_denominator = 1;
  double X = 1.0;
  std::optional<std::uint64_t> T_breach;
  std::size_t removed_total = 0;
  double wall_ms = 0.0;
};

struct RunResult {
  RunSummary summary;
  std::vector<TrajectoryRow> trajectory;
};

/// Runs the process to completion. Identical (h, seed, options) give
/// identical results apart from wall_ms.
RunResult run_process(const Hypergraph& h, std::uint64_t seed, const RunOptions& options = {});

/// X = 1 - M r / N. Throws std::logic_error when M r > N.
double unsaturated_fraction(std::uint64_t M, std::uint64_t N, std::uint32_t r);
double unsaturated_fraction(const RunSummary& summary);

}  // namespace greedy
