#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace greedy {

/// Multiset of the live degrees of unsaturated vertices, kept as a Fenwick
/// tree over degree values 0..max_degree.
///
/// Supports the queries the envelope check needs in O(log D): smallest and
/// largest degree present and how many degrees fall in a closed range.
class DegreeTracker {
 public:
  DegreeTracker() = default;
  explicit DegreeTracker(std::uint32_t max_degree);
  /// Tracks every entry of `degrees`.
  DegreeTracker(std::uint32_t max_degree, std::span<const std::uint32_t> degrees);

  void insert(std::uint32_t degree);
  void erase(std::uint32_t degree);
  void decrement(std::uint32_t degree) {
    erase(degree);
    insert(degree - 1);
  }

  std::size_t size() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }
  std::uint32_t max_degree() const noexcept { return static_cast<std::uint32_t>(tree_.size() - 1); }

  std::optional<std::uint32_t> min() const;
  std::optional<std::uint32_t> max() const;

  /// Number of tracked degrees in [lo, hi] (clamped to the domain).
  std::size_t count_in(std::int64_t lo, std::int64_t hi) const;

 private:
  std::size_t prefix(std::uint32_t degree) const;  // count of degrees <= degree
  std::uint32_t kth(std::size_t k) const;           // k-th smallest, 1-based

  std::vector<std::size_t> tree_;  // 1-based; slot d+1 holds degree d
  std::size_t total_ = 0;
  std::uint32_t top_bit_ = 1;
};

}  // namespace greedy
