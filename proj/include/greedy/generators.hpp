#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "greedy/hypergraph.hpp"
#include "greedy/random.hpp"

namespace greedy {

/// Default bound on N*D (= m*r) for generated instances.
inline constexpr std::uint64_t kDefaultInstanceCap = 100'000'000;

/// Cap from GREEDY_NIBBLE_CAP if set and parseable, else kDefaultInstanceCap.
std::uint64_t instance_cap_from_env();

/// Parameters of the partial-Steiner hypergraph H_{l,k} on ground set [n]:
/// vertices are the l-subsets, edges the families of l-subsets of each k-subset.
struct SteinerParams {
  std::uint32_t n = 0;
  std::uint32_t ell = 0;
  std::uint32_t k = 0;
  std::uint64_t N = 0;  // C(n, l)
  std::uint64_t m = 0;  // C(n, k)
  std::uint64_t r = 0;  // C(k, l)
  std::uint64_t D = 0;  // C(n-l, k-l)
  std::uint64_t L = 0;  // largest pair co-degree
};

/// Throws ParameterError unless 1 <= ell < k <= n; throws SizeCapError when
/// N*D exceeds `cap` (pass nullopt to lift the cap).
SteinerParams steiner_params(std::uint32_t n, std::uint32_t ell, std::uint32_t k,
                             std::optional<std::uint64_t> cap = kDefaultInstanceCap);

/// Builds H_{l,k}. Vertex v is the l-subset with colex rank v; edges follow
/// the colex order of the k-subsets.
Hypergraph build_steiner(const SteinerParams& params);

struct NearRegularResult {
  Hypergraph hypergraph;
  std::size_t target_edges = 0;
  DegreeSpread spread;
};

/// Rejection-samples uniform r-subsets, keeping one only if all its vertices
/// are below `target_degree` and it is new. Stops at N*target_degree/r edges or
/// after `rejection_budget` consecutive rejections (0 picks a default);
/// throws ParameterError if fewer than 90% of the target edges were placed.
NearRegularResult random_near_regular(std::uint32_t vertex_count, std::uint32_t uniformity,
                                      std::uint32_t target_degree, Rng& rng,
                                      std::size_t rejection_budget = 0);

}  // namespace greedy
