#include "greedy/drift.hpp"

#include <algorithm>
#include <vector>

#include "greedy/errors.hpp"

namespace greedy::analysis {

namespace {

void require_enumerable(const ProcessState& state) {
  if (state.q() == 0) throw StateError("drift undefined: no live edges");
  if (state.q() > kMaxEnumerationEdges) {
    throw StateError("too many live edges for exact enumeration");
  }
}

bool meets(std::span<const VertexId> a, std::span<const VertexId> b) {
  // Both sorted.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::int64_t pairs_in_edge(std::uint32_t r) { return std::int64_t{r} * (r - 1) / 2; }

}  // namespace

DriftReport exact_drift_q(const ProcessState& state, const Hypergraph& h, std::uint64_t L,
                          DriftOptions options) {
  require_enumerable(state);
  const auto Q = static_cast<std::int64_t>(state.q());
  const EdgePool& pool = state.pool();

  // Stamped marks so that each edge is counted once per A.
  std::vector<std::uint32_t> stamp(h.edge_count(), 0);
  std::uint32_t round = 0;
  std::int64_t kill_total = 0;
  for (EdgeId a : pool.live()) {
    ++round;
    std::int64_t kill = 0;
    for (VertexId v : h.edge(a)) {
      for (EdgeId f : h.incident(v)) {
        if (!pool.contains(f) || stamp[f] == round) continue;
        stamp[f] = round;
        ++kill;
      }
    }
    kill_total += kill + options.kill_bias;
  }

  std::int64_t sum_sq = 0;
  for (std::uint32_t d : state.degrees()) sum_sq += std::int64_t{d} * d;

  DriftReport rep;
  rep.exact = Rational(-kill_total, Q);
  rep.main_term = Rational(-sum_sq, Q);
  rep.gap = rep.exact - rep.main_term;
  rep.bound = Rational(pairs_in_edge(h.uniformity()) * static_cast<std::int64_t>(L));
  rep.within_bound = rep.gap >= 0 && rep.gap <= rep.bound;
  return rep;
}

DriftReport exact_drift_dv(const ProcessState& state, const Hypergraph& h, VertexId v,
                           std::uint64_t L, DriftOptions options) {
  require_enumerable(state);
  if (v >= h.vertex_count()) throw ParameterError("vertex out of range");
  if (state.is_saturated(v)) throw StateError("vertex " + std::to_string(v) + " is saturated");
  const auto Q = static_cast<std::int64_t>(state.q());
  const EdgePool& pool = state.pool();

  std::vector<EdgeId> at_v;
  for (EdgeId f : h.incident(v)) {
    if (pool.contains(f)) at_v.push_back(f);
  }

  std::int64_t hits = 0;
  for (EdgeId chosen : pool.live()) {
    for (EdgeId f : at_v) {
      if (meets(h.edge(chosen), h.edge(f))) ++hits;
    }
  }
  hits += options.kill_bias * static_cast<std::int64_t>(at_v.size());

  const auto dv = static_cast<std::int64_t>(state.degree(v));
  std::int64_t s_v = 0;
  for (EdgeId f : at_v) {
    for (VertexId u : h.edge(f)) {
      if (u != v) s_v += state.degree(u);
    }
  }

  DriftReport rep;
  rep.exact = Rational(-hits, Q);
  rep.main_term = Rational(-s_v, Q);
  rep.lower_order = Rational(dv * dv, Q);
  rep.gap = rep.exact + Rational(s_v + dv * dv, Q);
  rep.bound = Rational(dv * pairs_in_edge(h.uniformity()) * static_cast<std::int64_t>(L), Q);
  rep.within_bound = rep.gap >= 0 && rep.gap <= rep.bound;
  return rep;
}

}  // namespace greedy::analysis
