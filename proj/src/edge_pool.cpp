#include "greedy/edge_pool.hpp"

#include <numeric>
#include <string>

namespace greedy {

EdgePool::EdgePool(std::size_t edge_count) : live_(edge_count), position_(edge_count) {
  std::iota(live_.begin(), live_.end(), EdgeId{0});
  std::iota(position_.begin(), position_.end(), std::uint32_t{0});
}

EdgePool::EdgePool(std::size_t edge_count, std::span<const EdgeId> live)
    : position_(edge_count, kDead) {
  live_.reserve(live.size());
  for (EdgeId e : live) {
    if (e >= edge_count) throw ParameterError("edge " + std::to_string(e) + " out of range");
    if (position_[e] != kDead) throw ParameterError("edge " + std::to_string(e) + " repeated");
    position_[e] = static_cast<std::uint32_t>(live_.size());
    live_.push_back(e);
  }
}

void EdgePool::remove(EdgeId e) {
  if (!contains(e)) throw StateError("edge " + std::to_string(e) + " is not live");
  const std::uint32_t slot = position_[e];
  const EdgeId last = live_.back();
  live_[slot] = last;
  position_[last] = slot;
  live_.pop_back();
  position_[e] = kDead;
}

}  // namespace greedy
