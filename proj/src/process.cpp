#include "greedy/process.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "greedy/errors.hpp"

namespace greedy {

ProcessState::ProcessState(const Hypergraph& h, std::uint64_t seed, bool track_degrees)
    : pool_(h.edge_count()),
      degree_(h.vertex_count()),
      saturated_(h.vertex_count(), 0),
      rng_(make_rng(seed)) {
  for (VertexId v = 0; v < h.vertex_count(); ++v) degree_[v] = h.degree(v);
  if (track_degrees) {
    const std::uint32_t top = h.vertex_count() ? degree_spread(h).max : 0;
    tracker_.emplace(top, degree_);
  }
}

StepReport apply_choice(ProcessState& s, const Hypergraph& h, EdgeId chosen) {
  if (s.pool_.capacity() != h.edge_count()) {
    throw StateError("process state belongs to a different hypergraph");
  }
  if (!s.pool_.contains(chosen)) {
    throw StateError("edge " + std::to_string(chosen) + " is not live");
  }
  for (VertexId v : h.edge(chosen)) {
    if (s.tracker_) s.tracker_->erase(s.degree_[v]);
    s.saturated_[v] = 1;
  }
  const std::size_t removed = remove_edges_touching(h, s.pool_, chosen, [&](EdgeId f) {
    for (VertexId w : h.edge(f)) {
      if (s.tracker_ && !s.saturated_[w]) s.tracker_->decrement(s.degree_[w]);
      --s.degree_[w];
    }
  });
  s.matching_.push_back(chosen);
  s.removed_total_ += removed;
  return {chosen, removed};
}

StepReport greedy_step(ProcessState& state, const Hypergraph& h) {
  const EdgeId chosen = state.pool().sample(state.rng());
  return apply_choice(state, h, chosen);
}

namespace {

bool in_closed(double x, double lo, double hi) { return x >= lo && x <= hi; }

void classify_q(std::size_t q, const EnvelopePoint& env, BreachVerdict& v) {
  const double Q = static_cast<double>(q);
  v.q_dev = Q - env.q_hat;
  v.q_breach = std::abs(v.q_dev) > env.e_q;
  v.q_critical = in_closed(Q, env.q_hat + env.e_q - env.f_q, env.q_hat + env.e_q) ||
                 in_closed(Q, env.q_hat - env.e_q, env.q_hat - env.e_q + env.f_q);
}

}  // namespace

BreachVerdict breach_check(std::size_t q, const DegreeTracker& degrees,
                           const EnvelopePoint& env) {
  BreachVerdict v;
  classify_q(q, env, v);
  if (degrees.empty()) return v;
  const double lo = *degrees.min();
  const double hi = *degrees.max();
  v.d_max_dev = std::max(hi - env.d_hat, env.d_hat - lo);
  v.d_breach = v.d_max_dev > env.e_d;
  const auto upper = degrees.count_in(
      static_cast<std::int64_t>(std::ceil(env.d_hat + env.e_d - env.f_d)),
      static_cast<std::int64_t>(std::floor(env.d_hat + env.e_d)));
  const auto lower = degrees.count_in(
      static_cast<std::int64_t>(std::ceil(env.d_hat - env.e_d)),
      static_cast<std::int64_t>(std::floor(env.d_hat - env.e_d + env.f_d)));
  v.d_critical = upper + lower > 0;
  return v;
}

BreachVerdict breach_check_scan(std::size_t q, std::span<const std::uint32_t> degrees,
                                std::span<const std::uint8_t> saturated,
                                const EnvelopePoint& env) {
  BreachVerdict v;
  classify_q(q, env, v);
  for (std::size_t u = 0; u < degrees.size(); ++u) {
    if (saturated[u]) continue;
    const double d = degrees[u];
    const double dev = std::abs(d - env.d_hat);
    if (!v.witness || dev > v.d_max_dev) {
      v.d_max_dev = dev;
      v.witness = static_cast<VertexId>(u);
    }
    if (in_closed(d, env.d_hat + env.e_d - env.f_d, env.d_hat + env.e_d) ||
        in_closed(d, env.d_hat - env.e_d, env.d_hat - env.e_d + env.f_d)) {
      v.d_critical = true;
    }
  }
  v.d_breach = v.witness && v.d_max_dev > env.e_d;
  return v;
}

BreachVerdict breach_check(const ProcessState& state, const ParamSet& params) {
  const EnvelopePoint env = envelope_at(state.step(), params);
  if (const DegreeTracker* t = state.tracker()) return breach_check(state.q(), *t, env);
  return breach_check_scan(state.q(), state.degrees(), state.saturated(), env);
}

double unsaturated_fraction(std::uint64_t M, std::uint64_t N, std::uint32_t r) {
  if (M * r > N) throw std::logic_error("matching covers more than N vertices");
  if (N == 0) return 1.0;
  return static_cast<double>(N - M * r) / static_cast<double>(N);
}

double unsaturated_fraction(const RunSummary& s) { return unsaturated_fraction(s.M, s.N, s.r); }

RunResult run_process(const Hypergraph& h, std::uint64_t seed, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const bool with_envelope = opt.envelope.has_value();
  ProcessState state(h, seed, with_envelope);

  std::size_t check_every = opt.check_interval;
  if (check_every == 0) {
    check_every = h.edge_count() <= 1'000'000 ? 1 : (opt.stride ? opt.stride : 64);
  }

  RunResult out;
  auto& sum = out.summary;

  // Evaluates the envelope at the current step if it is defined there.
  auto envelope_here = [&]() -> std::optional<EnvelopePoint> {
    if (!with_envelope) return std::nullopt;
    const double p = p_at(state.step(), *opt.envelope);
    if (!(p > 0.0) || p < opt.p_floor) return std::nullopt;
    return envelope_at(state.step(), *opt.envelope);
  };

  auto observe = [&](bool final_step) {
    const std::uint64_t i = state.step();
    const bool record = opt.stride > 0 && (i % opt.stride == 0 || final_step);
    const bool check = with_envelope && !sum.T_breach && i % check_every == 0;
    if (!record && !check) return;
    const auto env = envelope_here();
    BreachVerdict verdict;
    if (env) {
      verdict = record ? breach_check_scan(state.q(), state.degrees(), state.saturated(), *env)
                       : breach_check(state.q(), *state.tracker(), *env);
      if (verdict.breach() && !sum.T_breach) sum.T_breach = i;
    }
    if (record) {
      TrajectoryRow row;
      row.step = i;
      row.q = state.q();
      row.p = h.vertex_count() == 0
                  ? 1.0
                  : 1.0 - static_cast<double>(h.uniformity()) * static_cast<double>(i) /
                              static_cast<double>(h.vertex_count());
      row.envelope = env;
      row.verdict = verdict;
      out.trajectory.push_back(row);
    }
  };

  observe(state.q() == 0);
  while (state.q() > 0) {
    greedy_step(state, h);
    observe(state.q() == 0);
  }

  sum.seed = seed;
  sum.M = state.step();
  sum.N = h.vertex_count();
  sum.r = h.uniformity();
  sum.m = h.edge_count();
  if (with_envelope) {
    sum.D = opt.envelope->D;
    sum.L = opt.envelope->L;
  }
  const std::uint64_t unsat = sum.N - sum.M * sum.r;
  const std::uint64_t g = std::gcd(unsat, sum.N);
  sum.x_numerator = g ? unsat / g : 1;
  sum.x_denominator = g ? sum.N / g : 1;
  sum.X = unsaturated_fraction(sum.M, sum.N, sum.r);
  sum.removed_total = state.removed_total();
  sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

}  // namespace greedy
