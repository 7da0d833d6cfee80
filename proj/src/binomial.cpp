#include "greedy/binomial.hpp"

#include <string>

#include "greedy/errors.hpp"

namespace greedy {

BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    c *= (n - k + j);
    c /= j;
  }
  return c;
}

std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    // c * (n-k+j) / j is exact at every step; the product fits in 128 bits
    // as long as c fits in 64.
    c = c * (n - k + j) / j;
    if (c > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  auto c = binomial_checked(n, k);
  if (!c) {
    throw ParameterError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                         ") exceeds 64-bit range");
  }
  return *c;
}

}  // namespace greedy
