#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "greedy/errors.hpp"
#include "greedy/hypergraph.hpp"

namespace greedy {

/// Set of live edge indices with O(1) uniform sampling and O(1) removal.
///
/// `live` is dense; `position[e]` is e's slot in `live` or `kDead`. Removal
/// swaps the last live edge into the vacated slot. There is no insertion:
/// once removed, an edge stays dead.
class EdgePool {
 public:
  static constexpr std::uint32_t kDead = std::numeric_limits<std::uint32_t>::max();

  EdgePool() = default;
  /// All of 0..edge_count-1 live, in ascending order.
  explicit EdgePool(std::size_t edge_count);
  /// Exactly the given edges live (ids < edge_count, no repeats).
  EdgePool(std::size_t edge_count, std::span<const EdgeId> live);

  std::size_t size() const noexcept { return live_.size(); }
  bool empty() const noexcept { return live_.empty(); }
  std::size_t capacity() const noexcept { return position_.size(); }

  bool contains(EdgeId e) const noexcept {
    return e < position_.size() && position_[e] != kDead;
  }

  std::span<const EdgeId> live() const noexcept { return live_; }

  /// Throws StateError if e is not live.
  void remove(EdgeId e);

  template <class Rng>
  EdgeId sample(Rng& rng) const {
    if (live_.empty()) throw StateError("cannot sample from an empty edge pool");
    std::uniform_int_distribution<std::size_t> pick(0, live_.size() - 1);
    return live_[pick(rng)];
  }

 private:
  std::vector<EdgeId> live_;
  std::vector<std::uint32_t> position_;
};

/// Removes `chosen` and every live edge sharing a vertex with it, calling
/// on_removed(e) once per removed edge. Returns the number removed.
///
/// Incidence lists are scanned in full and dead entries skipped; callers that
/// saturate the chosen vertices never scan those lists again.
template <class OnRemoved>
std::size_t remove_edges_touching(const Hypergraph& h, EdgePool& pool, EdgeId chosen,
                                  OnRemoved&& on_removed) {
  if (!pool.contains(chosen)) {
    throw StateError("edge " + std::to_string(chosen) + " is not live");
  }
  std::size_t removed = 0;
  for (VertexId v : h.edge(chosen)) {
    for (EdgeId f : h.incident(v)) {
      if (!pool.contains(f)) continue;
      pool.remove(f);
      on_removed(f);
      ++removed;
    }
  }
  return removed;
}

inline std::size_t remove_edges_touching(const Hypergraph& h, EdgePool& pool,
                                         EdgeId chosen) {
  return remove_edges_touching(h, pool, chosen, [](EdgeId) {});
}

}  // namespace greedy
