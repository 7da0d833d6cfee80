#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace greedy {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) exactly; zero when k > n.
BigInt binomial_big(std::uint64_t n, std::uint64_t k);

/// C(n, k) in 64 bits, or nullopt on overflow.
std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k);

/// C(n, k) for values known to fit; throws ParameterError otherwise.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace greedy
