#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "greedy/hypergraph.hpp"
#include "greedy/process.hpp"

namespace greedy::analysis {

using Rational = boost::rational<std::int64_t>;

/// Largest number of live edges the exact drift oracles will enumerate.
inline constexpr std::size_t kMaxEnumerationEdges = 10'000;

/// Exact one-step expected change of a statistic next to the leading-order
/// expression it is compared with.
struct DriftReport {
  Rational exact;      // E[change | current state], by enumeration
  Rational main_term;  // leading-order expression
  Rational gap;        // quantity the sandwich constrains
  Rational bound;      // gap must lie in [0, bound]
  Rational lower_order;  // d_v^2/Q term, reported for the degree drift only
  bool within_bound = false;
};

/// Test hook: adds `kill_bias` to every enumerated kill count so the checking
/// harness can prove it reports violations. -1 mimics forgetting A itself.
struct DriftOptions {
  int kill_bias = 0;
};

/// Drift of Q. exact = -(1/Q) sum over live A of kill(A), where kill(A) counts
/// live edges meeting A (A included); main_term = -(1/Q) sum_v d_v^2;
/// gap = exact - main_term, which lies in [0, C(r,2) L].
///
/// Throws StateError when Q = 0 or Q > kMaxEnumerationEdges.
DriftReport exact_drift_q(const ProcessState& state, const Hypergraph& h, std::uint64_t L,
                          DriftOptions options = {});

/// Drift of d_v for an unsaturated v. exact = -(1/Q) sum over live E' of the
/// number of live F containing v that meet E'. With
/// S_v = sum_{F containing v} sum_{u in F, u != v} d_u, the report holds
/// gap = exact + (S_v + d_v^2)/Q, bound = d_v C(r,2) L / Q,
/// main_term = -S_v/Q and lower_order = d_v^2/Q.
DriftReport exact_drift_dv(const ProcessState& state, const Hypergraph& h, VertexId v,
                           std::uint64_t L, DriftOptions options = {});

}  // namespace greedy::analysis
