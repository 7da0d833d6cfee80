#include "greedy/envelope.hpp"

#include <cmath>
#include <string>

#include "greedy/errors.hpp"

namespace greedy {

ParamSet ParamSet::make(std::uint64_t N, std::uint64_t D, std::uint32_t r, std::uint64_t L) {
  if (r < 2) throw ParameterError("r must be at least 2");
  if (N < r) throw ParameterError("N must be at least r");
  if (D < 1) throw ParameterError("D must be at least 1");
  if (L < 1 || L > D) throw ParameterError("L must satisfy 1 <= L <= D");
  return ParamSet{N, D, r, L, std::log(static_cast<double>(N))};
}

ParamSet ParamSet::from_hypergraph(const Hypergraph& h) {
  auto d = is_regular(h);
  if (!d) throw StateError("hypergraph is not regular");
  return make(h.vertex_count(), *d, h.uniformity(), max_codegree(h));
}

ParamSet ParamSet::approximate(const Hypergraph& h) {
  return make(h.vertex_count(), degree_spread(h).max, h.uniformity(), max_codegree(h));
}

double p_at(std::uint64_t step, const ParamSet& params) noexcept {
  return 1.0 - static_cast<double>(params.r) * static_cast<double>(step) /
                   static_cast<double>(params.N);
}

EnvelopePoint envelope_at(std::uint64_t step, const ParamSet& params) {
  const double p = p_at(step, params);
  if (!(p > 0.0)) {
    throw StateError("envelope undefined at step " + std::to_string(step) + " (p <= 0)");
  }
  EnvelopePoint e = envelope_at_p(p, params);
  e.t = static_cast<double>(step) / static_cast<double>(params.N);
  return e;
}

EnvelopePoint envelope_at_p(double p, const ParamSet& params) {
  if (!(p > 0.0) || p > 1.0) throw StateError("envelope needs p in (0, 1]");
  const double N = static_cast<double>(params.N);
  const double D = static_cast<double>(params.D);
  const double L = static_cast<double>(params.L);
  const double r = params.r;
  const double log_p = std::log(p);
  const double bracket = 1.0 - r * log_p;
  const double p_2r = std::pow(p, 2.0 - r);

  EnvelopePoint e;
  e.p = p;
  e.t = (1.0 - p) / r;
  e.q_hat = N * D * std::pow(p, r) / r;
  e.d_hat = D * std::pow(p, r - 1.0);
  e.f_d = std::sqrt(6.0 * r * L * D * params.log_N);
  e.e_d = e.f_d * bracket;
  e.f_q = N * L * params.log_N * p_2r;
  e.e_q = 15.0 * e.f_q * bracket * bracket;
  return e;
}

}  // namespace greedy
