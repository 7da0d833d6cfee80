#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace greedy {

// Colexicographic ranking of finite subsets of {0, 1, 2, ...}.
//
// The rank of {a_1 < ... < a_s} is sum_j C(a_j, j) (j counted from 1). The
// formula does not involve the ground-set size, so a subset keeps its rank
// when the ground set grows.

/// Throws ParameterError unless `subset` is strictly increasing.
std::uint64_t rank_subset_colex(std::span<const std::uint32_t> subset);

/// Inverse of rank_subset_colex for subsets of the given size.
std::vector<std::uint32_t> unrank_subset_colex(std::uint64_t rank, std::uint32_t size);

/// Same, additionally requiring rank < C(n, size).
std::vector<std::uint32_t> unrank_subset_colex(std::uint64_t rank, std::uint32_t size,
                                               std::uint32_t n);

/// Steps `subset` (size s, elements < n) to its colex successor.
/// Returns false when it was already the last s-subset of [n].
bool next_subset_colex(std::span<std::uint32_t> subset, std::uint32_t n);

}  // namespace greedy
