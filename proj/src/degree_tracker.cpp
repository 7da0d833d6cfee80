#include "greedy/degree_tracker.hpp"

#include <algorithm>

#include "greedy/errors.hpp"

namespace greedy {

DegreeTracker::DegreeTracker(std::uint32_t max_degree)
    : tree_(std::size_t{max_degree} + 2, 0) {
  while (top_bit_ * 2 < tree_.size()) top_bit_ *= 2;
}

DegreeTracker::DegreeTracker(std::uint32_t max_degree, std::span<const std::uint32_t> degrees)
    : DegreeTracker(max_degree) {
  for (std::uint32_t d : degrees) insert(d);
}

void DegreeTracker::insert(std::uint32_t degree) {
  if (degree > max_degree()) throw StateError("degree above tracker domain");
  for (std::size_t i = std::size_t{degree} + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  ++total_;
}

void DegreeTracker::erase(std::uint32_t degree) {
  if (degree > max_degree()) throw StateError("degree above tracker domain");
  if (count_in(degree, degree) == 0) throw StateError("degree not tracked");
  for (std::size_t i = std::size_t{degree} + 1; i < tree_.size(); i += i & (~i + 1)) --tree_[i];
  --total_;
}

std::size_t DegreeTracker::prefix(std::uint32_t degree) const {
  std::size_t sum = 0;
  for (std::size_t i = std::min<std::size_t>(std::size_t{degree} + 1, tree_.size() - 1); i > 0;
       i -= i & (~i + 1)) {
    sum += tree_[i];
  }
  return sum;
}

std::uint32_t DegreeTracker::kth(std::size_t k) const {
  std::size_t pos = 0;
  for (std::size_t bit = top_bit_; bit > 0; bit /= 2) {
    const std::size_t next = pos + bit;
    if (next < tree_.size() && tree_[next] < k) {
      pos = next;
      k -= tree_[next];
    }
  }
  // pos is the largest index with prefix < k; the degree sits at slot pos+1.
  return static_cast<std::uint32_t>(pos);
}

std::optional<std::uint32_t> DegreeTracker::min() const {
  if (total_ == 0) return std::nullopt;
  return kth(1);
}

std::optional<std::uint32_t> DegreeTracker::max() const {
  if (total_ == 0) return std::nullopt;
  return kth(total_);
}

std::size_t DegreeTracker::count_in(std::int64_t lo, std::int64_t hi) const {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min<std::int64_t>(hi, max_degree());
  if (lo > hi) return 0;
  const std::size_t upto_hi = prefix(static_cast<std::uint32_t>(hi));
  const std::size_t below_lo = lo == 0 ? 0 : prefix(static_cast<std::uint32_t>(lo - 1));
  return upto_hi - below_lo;
}

}  // namespace greedy
