#pragma once

#include <cstdint>

#include "greedy/hypergraph.hpp"

namespace greedy {

/// Instance parameters driving the trajectory and envelope functions.
/// Logarithms are natural throughout.
struct ParamSet {
  std::uint64_t N = 0;
  std::uint64_t D = 0;
  std::uint32_t r = 2;
  std::uint64_t L = 0;
  double log_N = 0.0;

  /// Checks D >= 1, L >= 1, L <= D, r >= 2, N >= r; throws ParameterError.
  static ParamSet make(std::uint64_t N, std::uint64_t D, std::uint32_t r, std::uint64_t L);

  /// Requires a regular hypergraph (StateError otherwise).
  static ParamSet from_hypergraph(const Hypergraph& h);

  /// Irregular instances: D taken as the maximum degree. The resulting
  /// envelopes are only an approximation.
  static ParamSet approximate(const Hypergraph& h);
};

/// Predicted trajectories and error bands at step i:
///   p = 1 - r i / N,  q_hat = N D p^r / r,  d_hat = D p^(r-1),
///   e_q = 15 N L p^(2-r) log N (1 - r log p)^2,
///   e_d = sqrt(6 r L D log N) (1 - r log p),
///   f_q = N L log N p^(2-r),  f_d = sqrt(6 r L D log N).
struct EnvelopePoint {
  double t = 0.0;
  double p = 1.0;
  double q_hat = 0.0;
  double d_hat = 0.0;
  double e_q = 0.0;
  double e_d = 0.0;
  double f_q = 0.0;
  double f_d = 0.0;
};

/// p(i) = 1 - r i / N.
double p_at(std::uint64_t step, const ParamSet& params) noexcept;

/// Throws StateError when p(i) <= 0 (p^(2-r) and log p blow up there).
EnvelopePoint envelope_at(std::uint64_t step, const ParamSet& params);

/// Same formulas evaluated at an arbitrary p in (0, 1].
EnvelopePoint envelope_at_p(double p, const ParamSet& params);

}  // namespace greedy
