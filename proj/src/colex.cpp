#include "greedy/colex.hpp"

#include <string>

#include "greedy/binomial.hpp"
#include "greedy/errors.hpp"

namespace greedy {

std::uint64_t rank_subset_colex(std::span<const std::uint32_t> subset) {
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (j > 0 && subset[j] <= subset[j - 1]) {
      throw ParameterError("subset is not strictly increasing at position " +
                           std::to_string(j));
    }
    rank += binomial(subset[j], j + 1);
  }
  return rank;
}

std::vector<std::uint32_t> unrank_subset_colex(std::uint64_t rank, std::uint32_t size) {
  std::vector<std::uint32_t> subset(size);
  for (std::uint32_t j = size; j >= 1; --j) {
    // Largest a with C(a, j) <= rank. a >= j-1 always works since C(j-1, j) = 0.
    std::uint64_t a = j - 1;
    std::uint64_t step = 1;
    while (true) {
      auto c = binomial_checked(a + step, j);
      if (!c || *c > rank) break;
      a += step;
      step *= 2;
    }
    for (; step > 0; step /= 2) {
      auto c = binomial_checked(a + step, j);
      if (c && *c <= rank) a += step;
    }
    subset[j - 1] = static_cast<std::uint32_t>(a);
    rank -= binomial(a, j);
  }
  return subset;
}

std::vector<std::uint32_t> unrank_subset_colex(std::uint64_t rank, std::uint32_t size,
                                               std::uint32_t n) {
  auto limit = binomial_checked(n, size);
  if (limit && rank >= *limit) {
    throw ParameterError("rank " + std::to_string(rank) + " out of range for C(" +
                         std::to_string(n) + ", " + std::to_string(size) + ")");
  }
  return unrank_subset_colex(rank, size);
}

bool next_subset_colex(std::span<std::uint32_t> subset, std::uint32_t n) {
  const std::size_t s = subset.size();
  for (std::size_t j = 0; j < s; ++j) {
    const std::uint32_t ceiling = (j + 1 < s) ? subset[j + 1] : n;
    if (subset[j] + 1 < ceiling) {
      ++subset[j];
      for (std::size_t i = 0; i < j; ++i) subset[i] = static_cast<std::uint32_t>(i);
      return true;
    }
  }
  return false;
}

}  // namespace greedy
