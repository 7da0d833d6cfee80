#include "greedy/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "greedy/binomial.hpp"
#include "greedy/colex.hpp"
#include "greedy/errors.hpp"

namespace greedy {

std::uint64_t instance_cap_from_env() {
  const char* raw = std::getenv("GREEDY_NIBBLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultInstanceCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultInstanceCap;
  return v;
}

namespace {

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw ParameterError(std::string(what) + " exceeds 64-bit range");
  }
  return v.convert_to<std::uint64_t>();
}

}  // namespace

SteinerParams steiner_params(std::uint32_t n, std::uint32_t ell, std::uint32_t k,
                             std::optional<std::uint64_t> cap) {
  if (ell < 1 || ell >= k || k > n) {
    throw ParameterError("need 1 <= l < k <= n, got n=" + std::to_string(n) +
                         " l=" + std::to_string(ell) + " k=" + std::to_string(k));
  }
  const BigInt N = binomial_big(n, ell);
  const BigInt D = binomial_big(n - ell, k - ell);
  if (cap && N * D > *cap) {
    throw SizeCapError("instance has N*D = " + boost::multiprecision::cpp_int(N * D).str() + " above the cap " +
                       std::to_string(*cap));
  }
  SteinerParams p;
  p.n = n;
  p.ell = ell;
  p.k = k;
  p.N = to_u64(N, "N");
  p.D = to_u64(D, "D");
  p.m = to_u64(binomial_big(n, k), "m");
  p.r = to_u64(binomial_big(k, ell), "r");
  // Two distinct l-sets whose union is as small as possible: l+1 points for
  // l >= 2, two points for l = 1.
  p.L = ell >= 2 ? to_u64(binomial_big(n - ell - 1, k - ell - 1), "L")
                 : to_u64(binomial_big(n - 2, k - 2), "L");
  return p;
}

Hypergraph build_steiner(const SteinerParams& p) {
  constexpr auto kMaxId = std::numeric_limits<std::uint32_t>::max();
  if (p.N > kMaxId || p.m > kMaxId || p.r > kMaxId) {
    throw ParameterError("instance too large for 32-bit ids");
  }
  const std::uint32_t r = static_cast<std::uint32_t>(p.r);

  // rank_table[a * ell + j] = C(a, j+1)
  std::vector<std::uint64_t> rank_table(std::size_t{p.n} * p.ell);
  for (std::uint32_t a = 0; a < p.n; ++a) {
    for (std::uint32_t j = 0; j < p.ell; ++j) rank_table[std::size_t{a} * p.ell + j] = binomial(a, j + 1);
  }

  // Positions (within a k-subset) of each of its l-subsets, in colex order.
  std::vector<std::uint32_t> positions;
  positions.reserve(std::size_t{r} * p.ell);
  std::vector<std::uint32_t> pos(p.ell);
  std::iota(pos.begin(), pos.end(), 0u);
  do {
    positions.insert(positions.end(), pos.begin(), pos.end());
  } while (next_subset_colex(pos, p.k));

  std::vector<VertexId> flat;
  flat.reserve(static_cast<std::size_t>(p.m) * r);
  std::vector<std::uint32_t> subset(p.k);
  std::iota(subset.begin(), subset.end(), 0u);
  do {
    for (std::uint32_t s = 0; s < r; ++s) {
      std::uint64_t rank = 0;
      for (std::uint32_t j = 0; j < p.ell; ++j) {
        rank += rank_table[std::size_t{subset[positions[s * p.ell + j]]} * p.ell + j];
      }
      flat.push_back(static_cast<VertexId>(rank));
    }
  } while (next_subset_colex(subset, p.n));

  try {
    return build_hypergraph_flat(static_cast<std::uint32_t>(p.N), r, std::move(flat));
  } catch (const HypergraphError& e) {
    throw std::logic_error(std::string("steiner construction produced an invalid edge: ") +
                           e.what());
  }
}

NearRegularResult random_near_regular(std::uint32_t vertex_count, std::uint32_t uniformity,
                                      std::uint32_t target_degree, Rng& rng,
                                      std::size_t rejection_budget) {
  if (uniformity < 2 || vertex_count < uniformity || target_degree < 1) {
    throw ParameterError("need r >= 2, N >= r and target degree >= 1");
  }
  if (rejection_budget == 0) {
    rejection_budget = std::max<std::size_t>(10'000, std::size_t{20} * vertex_count);
  }
  const std::size_t target =
      static_cast<std::size_t>(std::uint64_t{vertex_count} * target_degree / uniformity);

  std::vector<std::uint32_t> degree(vertex_count, 0);
  std::set<std::vector<VertexId>> seen;
  std::vector<VertexId> flat;
  std::vector<VertexId> pick;
  pick.reserve(uniformity);

  std::size_t misses = 0;
  while (seen.size() < target && misses < rejection_budget) {
    // Floyd's algorithm for a uniform r-subset of [N].
    pick.clear();
    for (std::uint32_t j = vertex_count - uniformity; j < vertex_count; ++j) {
      std::uniform_int_distribution<std::uint32_t> draw(0, j);
      const VertexId t = draw(rng);
      if (std::find(pick.begin(), pick.end(), t) == pick.end()) {
        pick.push_back(t);
      } else {
        pick.push_back(j);
      }
    }
    std::sort(pick.begin(), pick.end());
    const bool full = std::any_of(pick.begin(), pick.end(),
                                  [&](VertexId v) { return degree[v] >= target_degree; });
    if (full || !seen.insert(pick).second) {
      ++misses;
      continue;
    }
    misses = 0;
    for (VertexId v : pick) ++degree[v];
    flat.insert(flat.end(), pick.begin(), pick.end());
  }

  if (seen.size() * 10 < target * 9) {
    throw ParameterError("placed only " + std::to_string(seen.size()) + " of " +
                         std::to_string(target) +
                         " edges before the rejection budget ran out; lower the "
                         "target degree or raise N");
  }
  NearRegularResult out{build_hypergraph_flat(vertex_count, uniformity, std::move(flat)),
                        target, {}};
  out.spread = degree_spread(out.hypergraph);
  return out;
}

}  // namespace greedy
